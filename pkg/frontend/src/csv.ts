/**
 * Reader for the sweep CSV format emitted by the mixedmetro CLI:
 * `#`-prefixed metadata lines, one header line, comma-separated rows.
 */

export interface Table {
  /** Key/value metadata from `# key: value` lines; the bare tool line lands under `tool`. */
  meta: Record<string, string>;
  header: string[];
  rows: string[][];
}

export function parseTable(text: string): Table {
  const meta: Record<string, string> = {};
  const body: string[] = [];
  for (const raw of text.split(/\r?\n/)) {
    const line = raw.trimEnd();
    if (line.length === 0) continue;
    if (line.startsWith("#")) {
      const stripped = line.replace(/^#\s*/, "");
      const sep = stripped.indexOf(": ");
      if (sep >= 0) {
        meta[stripped.slice(0, sep)] = stripped.slice(sep + 2);
      } else {
        meta["tool"] = stripped;
      }
      continue;
    }
    body.push(line);
  }
  if (body.length === 0) {
    throw new Error("no header line found in CSV input");
  }
  const header = body[0].split(",");
  const rows = body.slice(1).map((line) => line.split(","));
  for (const row of rows) {
    if (row.length !== header.length) {
      throw new Error(
        `row width ${row.length} does not match header width ${header.length}`,
      );
    }
  }
  return { meta, header, rows };
}

export function requireHeader(table: Table, expected: string): void {
  const actual = table.header.join(",");
  if (actual !== expected) {
    throw new Error(`unexpected header: got "${actual}", want "${expected}"`);
  }
}

/** Column accessor that fails loudly instead of silently misreading. */
export function columnIndex(table: Table, name: string): number {
  const index = table.header.indexOf(name);
  if (index < 0) {
    throw new Error(`missing column "${name}"`);
  }
  return index;
}

export function numericMeta(table: Table, key: string): number {
  const raw = table.meta[key];
  if (raw === undefined) {
    throw new Error(`missing metadata line "# ${key}: ..."`);
  }
  const value = Number(raw);
  if (!Number.isFinite(value)) {
    throw new Error(`metadata "${key}" is not a finite number: ${raw}`);
  }
  return value;
}
