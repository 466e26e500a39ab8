import { readFileSync } from "fs";
import { join } from "path";
import { describe, expect, it } from "vitest";

import { columnIndex, numericMeta, parseTable, requireHeader } from "../src/csv.js";

const FIXTURES = join(__dirname, "fixtures");

const read = (name: string) => readFileSync(join(FIXTURES, name), "utf8");

describe("parseTable", () => {
  it("separates metadata, header and rows", () => {
    const table = parseTable(read("uncertainty_n10.csv"));
    expect(table.meta["command"]).toBe("qfi");
    expect(table.meta["seed"]).toBe("42");
    expect(table.header).toEqual([
      "strategy", "N", "p", "fisher_closed", "fisher_spectral", "delta_phi",
    ]);
    expect(table.rows.length).toBe(4 * 41);
  });

  it("keeps the config metadata parseable as JSON", () => {
    const table = parseTable(read("correlations_n10.csv"));
    const config = JSON.parse(table.meta["config"]);
    expect(config.n_values).toEqual([10]);
    expect(config.strategies).toEqual(["Cl", "Q1", "Q2"]);
  });

  it("reads per-point metadata from sampling files", () => {
    const table = parseTable(read("mc_q1_n5_p0_2.csv"));
    expect(numericMeta(table, "p")).toBeCloseTo(0.2, 12);
    expect(numericMeta(table, "n")).toBe(5);
    expect(table.meta["strategy"]).toBe("Q1");
  });

  it("rejects ragged rows", () => {
    expect(() => parseTable("a,b\n1,2,3\n")).toThrow(/row width/);
  });

  it("rejects empty input", () => {
    expect(() => parseTable("# only metadata\n")).toThrow(/no header/);
  });

  it("flags missing columns and wrong headers", () => {
    const table = parseTable("a,b\n1,2\n");
    expect(() => columnIndex(table, "missing")).toThrow(/missing column/);
    expect(() => requireHeader(table, "x,y")).toThrow(/unexpected header/);
  });
});
