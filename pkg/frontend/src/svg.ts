/**
 * Minimal deterministic SVG assembly: fixed canvas, fixed fonts, coordinates
 * rounded to 1/100 px.  No timestamps, no randomness, so identical inputs
 * produce identical bytes.
 */

export interface Scale {
  (value: number): number;
  domain: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  return scale;
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const inner = linearScale([Math.log10(domain[0]), Math.log10(domain[1])], range);
  const scale = ((value: number) => inner(Math.log10(value))) as Scale;
  scale.domain = domain;
  return scale;
}

const fmt = (value: number): string => {
  const rounded = value.toFixed(2);
  return rounded === "-0.00" ? "0.00" : rounded;
};

export interface PlotFrame {
  width: number;
  height: number;
  left: number;
  right: number;
  top: number;
  bottom: number;
}

export const DEFAULT_FRAME: PlotFrame = {
  width: 840,
  height: 520,
  left: 70,
  right: 820,
  top: 40,
  bottom: 470,
};

export class SvgCanvas {
  private readonly parts: string[] = [];

  constructor(private readonly width: number, private readonly height: number) {}

  polyline(points: Array<[number, number]>, stroke: string, extra = ""): void {
    const path = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    this.parts.push(
      `<polyline fill="none" stroke="${stroke}" stroke-width="1.8" ${extra}points="${path}"/>`,
    );
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke: string, extra = ""): void {
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" ` +
        `stroke="${stroke}" ${extra}/>`,
    );
  }

  circle(x: number, y: number, radius: number, fill: string, extra = ""): void {
    this.parts.push(
      `<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${fmt(radius)}" fill="${fill}" ${extra}/>`,
    );
  }

  text(x: number, y: number, content: string, extra = ""): void {
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" font-family="monospace" font-size="12" ` +
        `${extra}>${escapeXml(content)}</text>`,
    );
  }

  render(): string {
    return (
      `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" ` +
      `height="${this.height}" viewBox="0 0 ${this.width} ${this.height}">\n` +
      `<rect width="${this.width}" height="${this.height}" fill="white"/>\n` +
      this.parts.join("\n") +
      "\n</svg>\n"
    );
  }
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Axis frame with tick labels on both axes. */
export function drawFrame(
  canvas: SvgCanvas,
  frame: PlotFrame,
  x: Scale,
  y: Scale,
  options: { xLabel: string; yLabel: string; title: string; yTicks: number[]; xTicks: number[]; yFormat?: (v: number) => string },
): void {
  canvas.line(frame.left, frame.bottom, frame.right, frame.bottom, "black");
  canvas.line(frame.left, frame.top, frame.left, frame.bottom, "black");
  for (const tick of options.xTicks) {
    const px = x(tick);
    canvas.line(px, frame.bottom, px, frame.bottom + 5, "black");
    canvas.text(px - 10, frame.bottom + 18, tick.toFixed(1));
  }
  const yFormat = options.yFormat ?? ((v: number) => String(v));
  for (const tick of options.yTicks) {
    const py = y(tick);
    canvas.line(frame.left - 5, py, frame.left, py, "black");
    canvas.text(8, py + 4, yFormat(tick));
    canvas.line(frame.left, py, frame.right, py, "#dddddd");
  }
  canvas.text((frame.left + frame.right) / 2 - 20, frame.bottom + 36, options.xLabel);
  canvas.text(10, frame.top - 14, options.yLabel);
  canvas.text((frame.left + frame.right) / 2 - 60, 20, options.title, 'font-size="14"');
}
