/**
 * The three figure renderers.  Each consumes parsed sweep tables produced by
 * the mixedmetro CLI, never recomputes any physics, and returns the SVG text
 * together with the plotted geometry so tests can assert layouts exactly.
 */

import { Table, columnIndex, numericMeta, requireHeader } from "./csv.js";
import {
  DEFAULT_FRAME,
  PlotFrame,
  SvgCanvas,
  drawFrame,
  linearScale,
  logScale,
} from "./svg.js";

export const QFI_HEADER = "strategy,N,p,fisher_closed,fisher_spectral,delta_phi";
export const CORRELATIONS_HEADER =
  "strategy,N,p,discord,classical,total,entangled,min_pt_eig";
export const MC_SAMPLES_HEADER = "trial,value_bits";
export const MC_SUMMARY_HEADER = "min,max,conjectured,upper_bound";

const STRATEGY_COLORS: Record<string, string> = {
  S: "#1f77b4",
  Cl: "#2ca02c",
  Q1: "#d62728",
  Q2: "#9467bd",
};

const REQUIRED_STRATEGIES = ["S", "Cl", "Q1", "Q2"];

export interface CurvePoint {
  p: number;
  value: number;
  px: number;
  py: number;
}

export interface RenderResult {
  svg: string;
  diagnostics: Record<string, unknown>;
}

function groupByStrategy(
  table: Table,
  valueColumn: string,
): Map<string, Array<{ p: number; value: number }>> {
  const strategyAt = columnIndex(table, "strategy");
  const pAt = columnIndex(table, "p");
  const valueAt = columnIndex(table, valueColumn);
  const groups = new Map<string, Array<{ p: number; value: number }>>();
  for (const row of table.rows) {
    const entry = { p: Number(row[pAt]), value: Number(row[valueAt]) };
    const list = groups.get(row[strategyAt]) ?? [];
    list.push(entry);
    groups.set(row[strategyAt], list);
  }
  for (const list of groups.values()) {
    list.sort((a, b) => a.p - b.p);
  }
  return groups;
}

function singleRegisterSize(table: Table): number {
  const nAt = columnIndex(table, "N");
  const sizes = new Set(table.rows.map((row) => row[nAt]));
  if (sizes.size !== 1) {
    throw new Error(`expected a single register size, found {${[...sizes].join(", ")}}`);
  }
  return Number([...sizes][0]);
}

/** Phase-uncertainty curves, one per strategy, log-scaled uncertainty axis. */
export function renderUncertainty(table: Table): RenderResult {
  requireHeader(table, QFI_HEADER);
  const registerSize = singleRegisterSize(table);
  const groups = groupByStrategy(table, "delta_phi");
  const missing = REQUIRED_STRATEGIES.filter((name) => !groups.has(name));
  if (missing.length > 0) {
    throw new Error(`missing strategy rows: ${missing.join(", ")}`);
  }

  const finite: number[] = [];
  for (const list of groups.values()) {
    for (const point of list) {
      if (Number.isFinite(point.value)) finite.push(point.value);
    }
  }
  const frame = DEFAULT_FRAME;
  const x = linearScale([0, 1], [frame.left, frame.right]);
  const lo = Math.min(...finite);
  const hi = Math.max(...finite);
  const y = logScale([lo, hi], [frame.bottom, frame.top]);

  const canvas = new SvgCanvas(frame.width, frame.height);
  const decades: number[] = [];
  for (
    let exponent = Math.floor(Math.log10(lo));
    exponent <= Math.ceil(Math.log10(hi));
    exponent += 1
  ) {
    const tick = 10 ** exponent;
    if (tick >= lo * 0.999 && tick <= hi * 1.001) decades.push(tick);
  }
  drawFrame(canvas, frame, x, y, {
    xLabel: "mixedness p",
    yLabel: "phase uncertainty (log)",
    title: `phase uncertainty bound, N=${registerSize}`,
    xTicks: [0, 0.2, 0.4, 0.6, 0.8, 1.0],
    yTicks: decades,
    yFormat: (v) => v.toString(),
  });

  const curves: Record<string, CurvePoint[]> = {};
  let legendSlot = 0;
  for (const name of REQUIRED_STRATEGIES) {
    const points = (groups.get(name) ?? [])
      .filter((point) => Number.isFinite(point.value))
      .map((point) => ({
        p: point.p,
        value: point.value,
        px: x(point.p),
        py: y(point.value),
      }));
    curves[name] = points;
    canvas.polyline(
      points.map((point) => [point.px, point.py]),
      STRATEGY_COLORS[name],
    );
    const ly = frame.top + 16 + 18 * legendSlot;
    canvas.line(frame.left + 16, ly - 4, frame.left + 44, ly - 4, STRATEGY_COLORS[name], 'stroke-width="3" ');
    canvas.text(frame.left + 50, ly, name);
    legendSlot += 1;
  }

  return {
    svg: canvas.render(),
    diagnostics: { registerSize, curves },
  };
}

export interface McPoint {
  p: number;
  value: number;
  px: number;
  py: number;
  outOfBounds: boolean;
}

interface SummaryRecord {
  p: number;
  min: number;
  max: number;
  conjectured: number;
  upperBound: number;
}

function readSummary(table: Table): SummaryRecord {
  requireHeader(table, MC_SUMMARY_HEADER);
  if (table.rows.length !== 1) {
    throw new Error(`summary must hold exactly one row, found ${table.rows.length}`);
  }
  const [min, max, conjectured, upperBound] = table.rows[0].map(Number);
  for (const value of [min, max, conjectured, upperBound]) {
    if (!Number.isFinite(value)) {
      throw new Error("summary contains non-numeric fields");
    }
  }
  return { p: numericMeta(table, "p"), min, max, conjectured, upperBound };
}

/**
 * Discord Monte Carlo scatter.  Input is a family of sample tables and
 * summary tables (any order, distinguished by header), one pair per
 * mixedness point; the conjectured and maximal lines connect the summary
 * values.  Samples escaping the sandwich are flagged in red with a warning
 * annotation.
 */
export function renderDiscordMc(tables: Table[]): RenderResult {
  const summaries: SummaryRecord[] = [];
  const sampleTables: Table[] = [];
  for (const table of tables) {
    const header = table.header.join(",");
    if (header === MC_SUMMARY_HEADER) {
      summaries.push(readSummary(table));
    } else if (header === MC_SAMPLES_HEADER) {
      sampleTables.push(table);
    } else {
      throw new Error(`unrecognized table header: ${header}`);
    }
  }
  if (summaries.length === 0) {
    throw new Error("need at least one summary table for the bounding lines");
  }
  summaries.sort((a, b) => a.p - b.p);
  const byP = new Map(summaries.map((s) => [s.p, s]));

  const frame = DEFAULT_FRAME;
  const x = linearScale([0, 1], [frame.left, frame.right]);
  const top = Math.max(...summaries.map((s) => Math.max(s.upperBound, s.max)));
  const y = linearScale([0, top * 1.05], [frame.bottom, frame.top]);

  const canvas = new SvgCanvas(frame.width, frame.height);
  const ticks = [0, 0.25, 0.5, 0.75, 1].map((f) => Number((f * top).toFixed(2)));
  drawFrame(canvas, frame, x, y, {
    xLabel: "mixedness p",
    yLabel: "dephasing entropy gap (bits)",
    title: "discord sampling between bounding lines",
    xTicks: [0, 0.2, 0.4, 0.6, 0.8, 1.0],
    yTicks: ticks,
    yFormat: (v) => v.toFixed(2),
  });

  const points: McPoint[] = [];
  let outOfBounds = 0;
  for (const table of sampleTables) {
    const p = numericMeta(table, "p");
    const summary = byP.get(p);
    const valueAt = columnIndex(table, "value_bits");
    for (const row of table.rows) {
      const value = Number(row[valueAt]);
      const escaped =
        summary !== undefined &&
        (value < summary.conjectured - 1e-9 || value > summary.upperBound + 1e-9);
      if (escaped) outOfBounds += 1;
      points.push({ p, value, px: x(p), py: y(value), outOfBounds: escaped });
    }
  }
  for (const point of points) {
    canvas.circle(
      point.px,
      point.py,
      point.outOfBounds ? 4 : 2,
      point.outOfBounds ? "#ff0000" : "#00000055",
    );
  }
  canvas.polyline(
    summaries.map((s) => [x(s.p), y(s.conjectured)]),
    "#d62728",
    'stroke-width="2.5" ',
  );
  canvas.polyline(
    summaries.map((s) => [x(s.p), y(s.upperBound)]),
    "#1f77b4",
    'stroke-width="2.5" ',
  );
  canvas.text(frame.left + 16, frame.top + 16, "upper: maximal gap N[1-S]");
  canvas.text(frame.left + 16, frame.top + 34, "lower: computational-basis gap");
  if (outOfBounds > 0) {
    canvas.text(
      frame.left + 16,
      frame.top + 52,
      `WARNING: ${outOfBounds} sample(s) escape the bounding lines`,
      'fill="#ff0000" font-size="14" ',
    );
  }

  return {
    svg: canvas.render(),
    diagnostics: {
      points,
      outOfBounds,
      lines: summaries.map((s) => ({
        p: s.p,
        conjectured: s.conjectured,
        upperBound: s.upperBound,
      })),
    },
  };
}

export interface BoundaryMarker {
  strategy: string;
  p: number;
  px: number;
}

/**
 * Correlation curves in two panels: discord on the left with entanglement
 * boundary verticals (read off the `entangled` column flips, not
 * recomputed), classical correlations on the right.
 */
export function renderCorrelations(table: Table): RenderResult {
  requireHeader(table, CORRELATIONS_HEADER);
  const registerSize = singleRegisterSize(table);
  const discord = groupByStrategy(table, "discord");
  const classical = groupByStrategy(table, "classical");

  const strategyAt = columnIndex(table, "strategy");
  const pAt = columnIndex(table, "p");
  const flagAt = columnIndex(table, "entangled");
  const markers: BoundaryMarker[] = [];
  for (const name of ["Q1", "Q2"]) {
    const rows = table.rows
      .filter((row) => row[strategyAt] === name)
      .sort((a, b) => Number(a[pAt]) - Number(b[pAt]));
    for (let i = 1; i < rows.length; i += 1) {
      if (rows[i - 1][flagAt] === "false" && rows[i][flagAt] === "true") {
        markers.push({
          strategy: name,
          p: (Number(rows[i - 1][pAt]) + Number(rows[i][pAt])) / 2,
          px: 0,
        });
        break;
      }
    }
  }

  const width = 1100;
  const height = 520;
  const canvas = new SvgCanvas(width, height);
  const panels: Array<{
    frame: PlotFrame;
    series: Map<string, Array<{ p: number; value: number }>>;
    title: string;
    names: string[];
  }> = [
    {
      frame: { width, height, left: 70, right: 520, top: 40, bottom: 470 },
      series: discord,
      title: "discord (bits)",
      names: ["Q1", "Q2"],
    },
    {
      frame: { width, height, left: 620, right: 1070, top: 40, bottom: 470 },
      series: classical,
      title: "classical correlations (bits)",
      names: ["Cl", "Q1", "Q2"],
    },
  ];

  const curves: Record<string, Record<string, CurvePoint[]>> = {};
  for (const panel of panels) {
    const values = panel.names.flatMap((name) =>
      (panel.series.get(name) ?? []).map((point) => point.value),
    );
    if (values.length === 0) {
      throw new Error(`no rows for panel "${panel.title}"`);
    }
    const x = linearScale([0, 1], [panel.frame.left, panel.frame.right]);
    const hi = Math.max(...values, 1e-9);
    const y = linearScale([0, hi * 1.05], [panel.frame.bottom, panel.frame.top]);
    const ticks = [0, 0.25, 0.5, 0.75, 1].map((f) => Number((f * hi).toFixed(2)));
    drawFrame(canvas, panel.frame, x, y, {
      xLabel: "mixedness p",
      yLabel: panel.title,
      title: `${panel.title}, N=${registerSize}`,
      xTicks: [0, 0.2, 0.4, 0.6, 0.8, 1.0],
      yTicks: ticks,
      yFormat: (v) => v.toFixed(2),
    });
    const panelCurves: Record<string, CurvePoint[]> = {};
    let legendSlot = 0;
    for (const name of panel.names) {
      const list = panel.series.get(name);
      if (list === undefined) {
        throw new Error(`missing strategy rows: ${name}`);
      }
      const points = list.map((point) => ({
        p: point.p,
        value: point.value,
        px: x(point.p),
        py: y(point.value),
      }));
      panelCurves[name] = points;
      canvas.polyline(
        points.map((point) => [point.px, point.py]),
        STRATEGY_COLORS[name],
      );
      const ly = panel.frame.top + 16 + 18 * legendSlot;
      canvas.line(panel.frame.left + 16, ly - 4, panel.frame.left + 44, ly - 4, STRATEGY_COLORS[name], 'stroke-width="3" ');
      canvas.text(panel.frame.left + 50, ly, name);
      legendSlot += 1;
    }
    curves[panel.title] = panelCurves;
    if (panel.series === discord) {
      for (const marker of markers) {
        marker.px = x(marker.p);
        canvas.line(
          marker.px,
          panel.frame.top,
          marker.px,
          panel.frame.bottom,
          STRATEGY_COLORS[marker.strategy],
          'stroke-dasharray="6 4" ',
        );
        canvas.text(
          marker.px + 4,
          panel.frame.top + 80 + (marker.strategy === "Q2" ? 18 : 0),
          `${marker.strategy} boundary p=${marker.p.toFixed(3)}`,
        );
      }
    }
  }

  return {
    svg: canvas.render(),
    diagnostics: { registerSize, markers, curves },
  };
}
