/** Minimal CSV reader for the sweep outputs: no quoting, comma separated. */

export interface Table {
  columns: string[];
  rows: string[][];
}

export class CsvError extends Error {}

export function parseCsv(text: string): Table {
  const lines = text
    .split(/\r?\n/)
    .filter((line) => line.trim().length > 0);
  if (lines.length === 0) {
    throw new CsvError("empty CSV input");
  }
  const columns = lines[0].split(",");
  const rows = lines.slice(1).map((line, i) => {
    const fields = line.split(",");
    if (fields.length !== columns.length) {
      throw new CsvError(`row ${i + 1} has ${fields.length} fields, expected ${columns.length}`);
    }
    return fields;
  });
  if (rows.length === 0) {
    throw new CsvError("CSV has a header but no data rows");
  }
  return { columns, rows };
}

export function requireColumns(table: Table, names: string[]): void {
  for (const name of names) {
    if (!table.columns.includes(name)) {
      throw new CsvError(`missing required column ${name}`);
    }
  }
}

export function numericColumn(table: Table, name: string): number[] {
  const idx = table.columns.indexOf(name);
  if (idx < 0) throw new CsvError(`missing required column ${name}`);
  return table.rows.map((row, i) => {
    const value = Number(row[idx]);
    if (!Number.isFinite(value)) {
      throw new CsvError(`non-numeric value ${row[idx]} in column ${name}, row ${i + 1}`);
    }
    return value;
  });
}

export function textColumn(table: Table, name: string): string[] {
  const idx = table.columns.indexOf(name);
  if (idx < 0) throw new CsvError(`missing required column ${name}`);
  return table.rows.map((row) => row[idx]);
}
