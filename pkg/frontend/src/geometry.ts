/** Circular-sector math for the board: n equal angular slices.
 *
 * Slices are equal-angle regardless of size (zero-size pieces matter to
 * the game's structure, so they must stay visible); sizes are drawn as
 * labels.  Angles are measured clockwise from 12 o'clock, matching the
 * piece order of the pizza text format.
 */

export interface Sector {
  piece: number;
  startAngle: number;
  endAngle: number;
}

const TAU = Math.PI * 2;

export function sectorAngles(n: number, piece: number, gap = 0.015): Sector {
  const span = TAU / n;
  const start = piece * span;
  const pad = n > 1 ? Math.min(gap, span / 8) : 0;
  return { piece, startAngle: start + pad, endAngle: start + span - pad };
}

/** Point on the circle for a clockwise-from-top angle. */
export function polar(
  cx: number,
  cy: number,
  radius: number,
  angle: number,
): { x: number; y: number } {
  return {
    x: cx + radius * Math.sin(angle),
    y: cy - radius * Math.cos(angle),
  };
}

/** SVG path for one filled sector (a pie wedge). */
export function sectorPath(
  cx: number,
  cy: number,
  radius: number,
  startAngle: number,
  endAngle: number,
): string {
  const span = endAngle - startAngle;
  if (span >= TAU - 1e-9) {
    // single-piece pizza: draw the whole disc as two half arcs
    const top = polar(cx, cy, radius, 0);
    const bottom = polar(cx, cy, radius, Math.PI);
    return (
      `M ${top.x} ${top.y} ` +
      `A ${radius} ${radius} 0 1 1 ${bottom.x} ${bottom.y} ` +
      `A ${radius} ${radius} 0 1 1 ${top.x} ${top.y} Z`
    );
  }
  const from = polar(cx, cy, radius, startAngle);
  const to = polar(cx, cy, radius, endAngle);
  const largeArc = span > Math.PI ? 1 : 0;
  return (
    `M ${cx} ${cy} L ${from.x} ${from.y} ` +
    `A ${radius} ${radius} 0 ${largeArc} 1 ${to.x} ${to.y} Z`
  );
}

/** Anchor for a piece's size label, partway out from the center. */
export function labelPoint(
  cx: number,
  cy: number,
  radius: number,
  sector: Sector,
  fraction = 0.68,
): { x: number; y: number } {
  const mid = (sector.startAngle + sector.endAngle) / 2;
  return polar(cx, cy, radius * fraction, mid);
}

/** Stable serialization for state-hash comparisons (sorted keys). */
export function stableStringify(value: unknown): string {
  if (value === null || typeof value !== "object") {
    return JSON.stringify(value);
  }
  if (Array.isArray(value)) {
    return "[" + value.map(stableStringify).join(",") + "]";
  }
  const entries = Object.entries(value as Record<string, unknown>)
    .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
    .map(([k, v]) => JSON.stringify(k) + ":" + stableStringify(v));
  return "{" + entries.join(",") + "}";
}

/** Tiny non-cryptographic hash of a stable serialization. */
export function stateHash(value: unknown): string {
  const text = stableStringify(value);
  let hash = 2166136261;
  for (let i = 0; i < text.length; i++) {
    hash ^= text.charCodeAt(i);
    hash = Math.imul(hash, 16777619);
  }
  return (hash >>> 0).toString(16);
}
