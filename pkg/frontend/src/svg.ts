/** Static SVG line charts: one <path class="curve"> per series, optional
 * vertical <line class="threshold"> markers. Linear axes only. */

export interface Point {
  x: number;
  y: number;
}

export interface Series {
  name: string;
  points: Point[];
}

export interface Marker {
  label: string;
  x: number;
}

export interface ChartSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  markers?: Marker[];
  width?: number;
  height?: number;
}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const MARGIN = { top: 40, right: 150, bottom: 50, left: 60 };

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  return [lo, hi];
}

function ticks(lo: number, hi: number, count = 6): number[] {
  const span = hi - lo;
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const candidates = [step, 2 * step, 5 * step, 10 * step];
  const chosen = candidates.find((s) => span / s <= count) ?? 10 * step;
  const out: number[] = [];
  for (let t = Math.ceil(lo / chosen) * chosen; t <= hi + 1e-12; t += chosen) {
    out.push(Number(t.toPrecision(12)));
  }
  return out;
}

function fmtTick(v: number): string {
  return Number(v.toPrecision(6)).toString();
}

export function renderChart(spec: ChartSpec): string {
  const width = spec.width ?? 760;
  const height = spec.height ?? 480;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const xs = spec.series.flatMap((s) => s.points.map((p) => p.x));
  const ys = spec.series.flatMap((s) => s.points.map((p) => p.y));
  for (const m of spec.markers ?? []) xs.push(m.x);
  const [xLo, xHi] = extent(xs);
  let [yLo, yHi] = extent(ys);
  yLo = Math.min(0, yLo);
  yHi += 0.05 * (yHi - yLo);

  const px = (x: number) => MARGIN.left + ((x - xLo) / (xHi - xLo)) * plotW;
  const py = (y: number) => MARGIN.top + plotH - ((y - yLo) / (yHi - yLo)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${width / 2}" y="20" text-anchor="middle" font-size="15">${spec.title}</text>`,
  );

  // axes
  const x0 = MARGIN.left;
  const y0 = MARGIN.top + plotH;
  parts.push(
    `<g class="axes" stroke="#333" fill="none">` +
      `<line x1="${x0}" y1="${y0}" x2="${x0 + plotW}" y2="${y0}"/>` +
      `<line x1="${x0}" y1="${MARGIN.top}" x2="${x0}" y2="${y0}"/></g>`,
  );
  for (const t of ticks(xLo, xHi)) {
    const x = px(t);
    parts.push(`<line x1="${x}" y1="${y0}" x2="${x}" y2="${y0 + 5}" stroke="#333"/>`);
    parts.push(`<text x="${x}" y="${y0 + 18}" text-anchor="middle">${fmtTick(t)}</text>`);
  }
  for (const t of ticks(yLo, yHi)) {
    const y = py(t);
    parts.push(`<line x1="${x0 - 5}" y1="${y}" x2="${x0}" y2="${y}" stroke="#333"/>`);
    parts.push(`<text x="${x0 - 8}" y="${y + 4}" text-anchor="end">${fmtTick(t)}</text>`);
  }
  parts.push(
    `<text x="${x0 + plotW / 2}" y="${height - 12}" text-anchor="middle">${spec.xLabel}</text>`,
  );
  parts.push(
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">${spec.yLabel}</text>`,
  );

  // threshold markers
  for (const marker of spec.markers ?? []) {
    const x = px(marker.x);
    parts.push(
      `<line class="threshold" x1="${x}" y1="${MARGIN.top}" x2="${x}" y2="${y0}" ` +
        `stroke="#888" stroke-dasharray="5 4"/>`,
    );
    parts.push(
      `<text x="${x + 4}" y="${MARGIN.top + 12}" fill="#555">${marker.label}</text>`,
    );
  }

  // curves and legend
  spec.series.forEach((series, i) => {
    const color = PALETTE[i % PALETTE.length];
    const d = series.points
      .map((p, j) => `${j === 0 ? "M" : "L"}${px(p.x).toFixed(2)} ${py(p.y).toFixed(2)}`)
      .join(" ");
    parts.push(
      `<path class="curve" d="${d}" fill="none" stroke="${color}" stroke-width="1.6"/>`,
    );
    const ly = MARGIN.top + 16 * i;
    const lx = MARGIN.left + plotW + 12;
    parts.push(`<line x1="${lx}" y1="${ly}" x2="${lx + 20}" y2="${ly}" stroke="${color}" stroke-width="1.6"/>`);
    parts.push(`<text x="${lx + 26}" y="${ly + 4}">${series.name}</text>`);
  });

  parts.push("</svg>");
  return parts.join("\n");
}
