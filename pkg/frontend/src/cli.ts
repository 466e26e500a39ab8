#!/usr/bin/env node
/**
 * Figure renderer for mixedmetro sweep CSVs.
 *
 * Usage:
 *   node dist/cli.js --figure uncertainty --in qfi.csv --out fig2.svg
 *   node dist/cli.js --figure discord_mc --in mc_p02.csv --in mc_p02.summary.csv \
 *       --in mc_p05.csv --in mc_p05.summary.csv --out fig3.svg
 *   node dist/cli.js --figure correlations --in corr.csv --out fig4.svg
 */

import { readFile, writeFile } from "fs/promises";

import { parseTable } from "./csv.js";
import {
  RenderResult,
  renderCorrelations,
  renderDiscordMc,
  renderUncertainty,
} from "./figures.js";

interface Args {
  figure: string;
  inputs: string[];
  out: string;
}

function parseArgs(argv: string[]): Args {
  let figure = "";
  let out = "";
  const inputs: string[] = [];
  for (let i = 0; i < argv.length; i += 1) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (flag === "--figure" || flag === "--in" || flag === "--out") {
      if (value === undefined) throw new Error(`missing value for ${flag}`);
      if (flag === "--figure") figure = value;
      else if (flag === "--out") out = value;
      else inputs.push(value);
      i += 1;
    } else {
      throw new Error(`unknown argument ${flag}`);
    }
  }
  if (!figure || !out || inputs.length === 0) {
    throw new Error("required: --figure <name> --in <csv> [--in <csv> ...] --out <svg>");
  }
  return { figure, inputs, out };
}

async function run(argv: string[]): Promise<number> {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(String(err instanceof Error ? err.message : err));
    return 2;
  }
  try {
    const tables = await Promise.all(
      args.inputs.map(async (path) => parseTable(await readFile(path, "utf8"))),
    );
    let result: RenderResult;
    switch (args.figure) {
      case "uncertainty":
        if (tables.length !== 1) throw new Error("uncertainty takes exactly one input");
        result = renderUncertainty(tables[0]);
        break;
      case "discord_mc":
        result = renderDiscordMc(tables);
        break;
      case "correlations":
        if (tables.length !== 1) throw new Error("correlations takes exactly one input");
        result = renderCorrelations(tables[0]);
        break;
      default:
        throw new Error(`unknown figure "${args.figure}"`);
    }
    await writeFile(args.out, result.svg, "utf8");
    console.log(`wrote ${args.out}`);
    return 0;
  } catch (err) {
    console.error(String(err instanceof Error ? err.message : err));
    return 1;
  }
}

run(process.argv.slice(2)).then((code) => {
  process.exitCode = code;
});
