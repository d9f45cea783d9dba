import { describe, expect, it } from "vitest";

import {
  labelPoint,
  polar,
  sectorAngles,
  sectorPath,
  stableStringify,
  stateHash,
} from "../src/geometry.js";

const TAU = Math.PI * 2;

describe("sectorAngles", () => {
  it("splits the circle into n equal spans", () => {
    const n = 5;
    let covered = 0;
    for (let i = 0; i < n; i++) {
      const s = sectorAngles(n, i, 0);
      covered += s.endAngle - s.startAngle;
      expect(s.startAngle).toBeCloseTo((i * TAU) / n);
    }
    expect(covered).toBeCloseTo(TAU);
  });

  it("keeps a visible gap between adjacent sectors", () => {
    const a = sectorAngles(6, 0);
    const b = sectorAngles(6, 1);
    expect(b.startAngle).toBeGreaterThan(a.endAngle);
  });

  it("gives the single piece the whole disc", () => {
    const s = sectorAngles(1, 0);
    expect(s.startAngle).toBe(0);
    expect(s.endAngle).toBeCloseTo(TAU);
  });
});

describe("polar", () => {
  it("puts angle zero at twelve o'clock", () => {
    const p = polar(100, 100, 50, 0);
    expect(p.x).toBeCloseTo(100);
    expect(p.y).toBeCloseTo(50);
  });

  it("walks clockwise", () => {
    const p = polar(0, 0, 1, Math.PI / 2);
    expect(p.x).toBeCloseTo(1);
    expect(p.y).toBeCloseTo(0);
  });
});

describe("sectorPath", () => {
  it("starts at the center for a wedge", () => {
    const d = sectorPath(10, 10, 5, 0, 1);
    expect(d.startsWith("M 10 10 L")).toBe(true);
    expect(d.endsWith("Z")).toBe(true);
  });

  it("uses the large-arc flag beyond half a turn", () => {
    const small = sectorPath(0, 0, 1, 0, Math.PI / 2);
    const large = sectorPath(0, 0, 1, 0, Math.PI * 1.5);
    expect(small).toContain(" 0 0 1 ");
    expect(large).toContain(" 0 1 1 ");
  });

  it("draws a full disc for one piece", () => {
    const d = sectorPath(0, 0, 1, 0, TAU);
    expect(d).not.toContain("L");
    expect((d.match(/A /g) ?? []).length).toBe(2);
  });
});

describe("labelPoint", () => {
  it("sits strictly inside the circle", () => {
    const s = sectorAngles(7, 3);
    const p = labelPoint(0, 0, 100, s);
    expect(Math.hypot(p.x, p.y)).toBeLessThan(100);
  });
});

describe("state hashing", () => {
  it("is key-order independent", () => {
    expect(stableStringify({ a: 1, b: [2, { c: 3 }] })).toBe(
      stableStringify({ b: [2, { c: 3 }], a: 1 }),
    );
    expect(stateHash({ x: 1, y: 2 })).toBe(stateHash({ y: 2, x: 1 }));
  });

  it("distinguishes different states", () => {
    expect(stateHash({ scores: { alice: 2, bob: 0 } })).not.toBe(
      stateHash({ scores: { alice: 0, bob: 2 } }),
    );
  });
});
