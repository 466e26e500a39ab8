import { readFileSync } from "fs";
import { join } from "path";
import { describe, expect, it } from "vitest";

import { parseTable, Table } from "../src/csv.js";
import {
  CurvePoint,
  McPoint,
  renderCorrelations,
  renderDiscordMc,
  renderUncertainty,
} from "../src/figures.js";

const FIXTURES = join(__dirname, "fixtures");

const read = (name: string) => readFileSync(join(FIXTURES, name), "utf8");
const table = (name: string) => parseTable(read(name));

const MC_FAMILY = ["0_2", "0_4", "0_6", "0_8"].flatMap((tag) => [
  `mc_q1_n5_p${tag}.csv`,
  `mc_q1_n5_p${tag}.summary.csv`,
]);

describe("renderUncertainty", () => {
  const result = renderUncertainty(table("uncertainty_n10.csv"));
  const curves = result.diagnostics["curves"] as Record<string, CurvePoint[]>;

  it("produces an SVG with one labeled curve per strategy", () => {
    expect(result.svg).toContain("<svg");
    for (const name of ["S", "Cl", "Q1", "Q2"]) {
      expect(curves[name].length).toBeGreaterThan(0);
    }
  });

  it("places the Q2 curve below every other strategy for p > 0", () => {
    // SVG y grows downward: the lowest uncertainty curve has the largest py.
    const byP = (points: CurvePoint[]) => new Map(points.map((pt) => [pt.p, pt]));
    const q2 = byP(curves["Q2"]);
    for (const other of ["S", "Cl", "Q1"]) {
      for (const point of curves[other]) {
        const reference = q2.get(point.p);
        expect(reference).toBeDefined();
        expect(reference!.py).toBeGreaterThanOrEqual(point.py - 1e-9);
      }
    }
  });

  it("shows the classical strategy beating Q1 at strong mixing", () => {
    const q1 = new Map(curves["Q1"].map((pt) => [pt.p, pt.py]));
    const cl = curves["Cl"].filter((pt) => pt.p > 0 && pt.p <= 0.1);
    expect(cl.length).toBeGreaterThan(0);
    for (const point of cl) {
      expect(point.py).toBeGreaterThan(q1.get(point.p)!);
    }
  });

  it("draws a monotone decreasing standard-strategy curve", () => {
    const values = curves["S"].map((pt) => pt.value);
    for (let i = 1; i < values.length; i += 1) {
      expect(values[i]).toBeLessThan(values[i - 1]);
    }
  });

  it("is deterministic", () => {
    const again = renderUncertainty(table("uncertainty_n10.csv"));
    expect(again.svg).toBe(result.svg);
  });

  it("rejects inputs missing a strategy", () => {
    const full = table("uncertainty_n10.csv");
    const partial: Table = {
      ...full,
      rows: full.rows.filter((row) => row[0] === "Q2"),
    };
    expect(() => renderUncertainty(partial)).toThrow(/missing strategy rows: S, Cl, Q1/);
  });

  it("rejects mixed register sizes", () => {
    const full = table("uncertainty_n10.csv");
    const doctored: Table = {
      ...full,
      rows: full.rows.map((row, i) => (i === 0 ? ["S", "9", ...row.slice(2)] : row)),
    };
    expect(() => renderUncertainty(doctored)).toThrow(/single register size/);
  });
});

describe("renderDiscordMc", () => {
  const tables = MC_FAMILY.map(table);
  const result = renderDiscordMc(tables);
  const points = result.diagnostics["points"] as McPoint[];

  it("draws every sample between the two bounding lines", () => {
    expect(points.length).toBe(4 * 300);
    expect(result.diagnostics["outOfBounds"]).toBe(0);
    expect(result.svg).not.toContain("WARNING");
  });

  it("connects the summary values into two lines", () => {
    const lines = result.diagnostics["lines"] as Array<Record<string, number>>;
    expect(lines.map((line) => line.p)).toEqual([0.2, 0.4, 0.6, 0.8]);
    for (const line of lines) {
      expect(line.upperBound).toBeGreaterThan(line.conjectured);
    }
  });

  it("is deterministic", () => {
    expect(renderDiscordMc(MC_FAMILY.map(table)).svg).toBe(result.svg);
  });

  it("renders lines only when no sample tables are given", () => {
    const summariesOnly = tables.filter((t) => t.header.join(",").startsWith("min"));
    const bare = renderDiscordMc(summariesOnly);
    expect((bare.diagnostics["points"] as McPoint[]).length).toBe(0);
    expect(bare.svg).toContain("polyline");
  });

  it("marks escaped samples with a visible warning", () => {
    const doctored = MC_FAMILY.map(table);
    const samples = doctored.find((t) => t.header.join(",") === "trial,value_bits")!;
    samples.rows[0] = ["0", "4.9"]; // far above the five-qubit upper bound
    const flagged = renderDiscordMc(doctored);
    expect(flagged.diagnostics["outOfBounds"]).toBe(1);
    expect(flagged.svg).toContain("WARNING: 1 sample(s) escape the bounding lines");
    expect(flagged.svg).toContain("#ff0000");
  });

  it("rejects malformed summaries", () => {
    const doctored = MC_FAMILY.map(table);
    const summary = doctored.find((t) => t.header.join(",").startsWith("min"))!;
    summary.rows[0] = ["oops", "1", "2", "3"];
    expect(() => renderDiscordMc(doctored)).toThrow(/non-numeric/);
  });

  it("requires at least one summary", () => {
    const samplesOnly = tables.filter((t) => t.header.join(",") === "trial,value_bits");
    expect(() => renderDiscordMc(samplesOnly)).toThrow(/at least one summary/);
  });
});

describe("renderCorrelations", () => {
  const result = renderCorrelations(table("correlations_n10.csv"));
  const markers = result.diagnostics["markers"] as Array<{ strategy: string; p: number }>;
  const curves = result.diagnostics["curves"] as Record<
    string,
    Record<string, CurvePoint[]>
  >;

  it("marks the entanglement boundaries where the flag flips", () => {
    const byStrategy = Object.fromEntries(markers.map((m) => [m.strategy, m.p]));
    expect(byStrategy["Q1"]).toBeCloseTo(0.118, 2);
    expect(byStrategy["Q2"]).toBeCloseTo(0.088, 2);
    expect(Math.abs(byStrategy["Q1"] - 0.118)).toBeLessThan(2.5e-3);
    expect(Math.abs(byStrategy["Q2"] - 0.088)).toBeLessThan(2.5e-3);
    expect(result.svg).toContain("Q1 boundary");
    expect(result.svg).toContain("Q2 boundary");
  });

  it("shows classical correlations vanishing in the fully mixed limit", () => {
    for (const name of ["Cl", "Q1", "Q2"]) {
      const first = curves["classical correlations (bits)"][name][0];
      expect(first.p).toBe(0);
      expect(first.value).toBeCloseTo(0, 9);
    }
  });

  it("keeps Q1 on top of the classical-correlations panel", () => {
    const panel = curves["classical correlations (bits)"];
    const q1 = new Map(panel["Q1"].map((pt) => [pt.p, pt.value]));
    for (const name of ["Cl", "Q2"]) {
      for (const point of panel[name]) {
        expect(point.value).toBeLessThanOrEqual(q1.get(point.p)! + 1e-9);
      }
    }
  });

  it("is deterministic", () => {
    expect(renderCorrelations(table("correlations_n10.csv")).svg).toBe(result.svg);
  });
});
