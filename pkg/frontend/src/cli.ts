/** Command line: render --figure fig3 --csv input.csv --out figure.svg */

import { readFileSync, writeFileSync } from "node:fs";
import { CsvError } from "./csv.js";
import { FIGURE_IDS, renderFigure } from "./figures.js";

const USAGE = `usage: figures render --figure <${FIGURE_IDS.join("|")}> --csv PATH --out PATH`;

function parseArgs(argv: string[]): { figure: string; csv: string; out: string } {
  if (argv[0] !== "render") {
    throw new Error(USAGE);
  }
  const options = new Map<string, string>();
  for (let i = 1; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new Error(USAGE);
    }
    options.set(flag.slice(2), value);
  }
  const figure = options.get("figure");
  const csv = options.get("csv");
  const out = options.get("out");
  if (!figure || !csv || !out) {
    throw new Error(USAGE);
  }
  return { figure, csv, out };
}

export function main(argv: string[]): number {
  let args: { figure: string; csv: string; out: string };
  try {
    args = parseArgs(argv);
  } catch (error) {
    console.error((error as Error).message);
    return 2;
  }
  let csvText: string;
  try {
    csvText = readFileSync(args.csv, "utf8");
  } catch (error) {
    console.error(`cannot read ${args.csv}: ${(error as Error).message}`);
    return 1;
  }
  let svg: string;
  try {
    svg = renderFigure(args.figure, csvText);
  } catch (error) {
    if (error instanceof CsvError) {
      console.error(`invalid input: ${error.message}`);
      return 1;
    }
    throw error;
  }
  writeFileSync(args.out, svg);
  return 0;
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
