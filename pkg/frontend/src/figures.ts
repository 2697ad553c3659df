/** Figure definitions: which CSV columns each figure needs and how its
 * curves are assembled. The renderer never computes physics; every plotted
 * number comes from the CSV. */

import { CsvError, numericColumn, parseCsv, requireColumns, textColumn, Table } from "./csv.js";
import { ChartSpec, renderChart, Series } from "./svg.js";

export type FigureId = "fig3" | "fig4a" | "fig4b" | "fig5";

export const FIGURE_IDS: FigureId[] = ["fig3", "fig4a", "fig4b", "fig5"];

function groupedSeries(
  table: Table,
  keyColumn: string,
  xColumn: string,
  yColumn: string,
  label: (key: string) => string,
): Series[] {
  const keys = textColumn(table, keyColumn);
  const xs = numericColumn(table, xColumn);
  const ys = numericColumn(table, yColumn);
  const order: string[] = [];
  const byKey = new Map<string, Series>();
  keys.forEach((key, i) => {
    let series = byKey.get(key);
    if (!series) {
      series = { name: label(key), points: [] };
      byKey.set(key, series);
      order.push(key);
    }
    series.points.push({ x: xs[i], y: ys[i] });
  });
  return order.map((key) => byKey.get(key)!);
}

function column(table: Table, xColumn: string, yColumn: string, name: string): Series {
  const xs = numericColumn(table, xColumn);
  const ys = numericColumn(table, yColumn);
  return { name, points: xs.map((x, i) => ({ x, y: ys[i] })) };
}

function buildFig3(table: Table): ChartSpec {
  requireColumns(table, ["alpha0", "N", "q", "E_bits"]);
  return {
    title: "Entanglement vs coherent amplitude",
    xLabel: "|alpha0|",
    yLabel: "E (ebits)",
    series: groupedSeries(table, "N", "alpha0", "E_bits", (n) => `N = ${n}`),
  };
}

function buildFig4a(table: Table): ChartSpec {
  requireColumns(table, ["alpha0", "N", "q", "E_bits"]);
  return {
    title: "Entanglement vs number of components",
    xLabel: "N",
    yLabel: "E (ebits)",
    series: groupedSeries(
      table,
      "q",
      "N",
      "E_bits",
      (q) => `q = ${q}`,
    ),
  };
}

function buildFig4b(table: Table): ChartSpec {
  requireColumns(table, ["N", "E_bits", "B", "S", "BplusS"]);
  return {
    title: "Entanglement as a sum of entropies",
    xLabel: "N",
    yLabel: "entropy (bits)",
    series: [
      column(table, "N", "E_bits", "E"),
      column(table, "N", "B", "B"),
      column(table, "N", "S", "S"),
      column(table, "N", "BplusS", "B + S"),
    ],
  };
}

function buildFig5(table: Table): ChartSpec {
  requireColumns(table, ["N", "E_bits", "E_rics_qmax", "N1", "N2"]);
  const n1 = numericColumn(table, "N1")[0];
  const n2 = numericColumn(table, "N2")[0];
  return {
    title: "Kerr state vs best rotationally-invariant state",
    xLabel: "N",
    yLabel: "E (ebits)",
    series: [
      column(table, "N", "E_bits", "Kerr"),
      column(table, "N", "E_rics_qmax", "q max"),
    ],
    markers: [
      { label: "N1", x: n1 },
      { label: "N2", x: n2 },
    ],
  };
}

const BUILDERS: Record<FigureId, (table: Table) => ChartSpec> = {
  fig3: buildFig3,
  fig4a: buildFig4a,
  fig4b: buildFig4b,
  fig5: buildFig5,
};

export function renderFigure(figureId: string, csvText: string): string {
  const builder = BUILDERS[figureId as FigureId];
  if (!builder) {
    throw new CsvError(`unknown figure id ${figureId}; expected one of ${FIGURE_IDS.join(", ")}`);
  }
  return renderChart(builder(parseCsv(csvText)));
}
