import { describe, expect, it } from "vitest";

import {
  canonical,
  normalize,
  formatFraction,
  fracEquals,
  isZero,
  parseFraction,
  toNumber,
} from "../src/fractions.js";

describe("parseFraction", () => {
  it("parses p/q strings", () => {
    expect(parseFraction("1/8")).toEqual({ num: 1n, den: 8n });
    expect(parseFraction("-49/1152")).toEqual({ num: -49n, den: 1152n });
    expect(parseFraction(" 3 / 256 ")).toEqual({ num: 3n, den: 256n });
  });

  it("parses decimals exactly", () => {
    expect(parseFraction("0.125")).toEqual({ num: 1n, den: 8n });
    expect(parseFraction("-0.5")).toEqual({ num: -1n, den: 2n });
    expect(parseFraction("2")).toEqual({ num: 2n, den: 1n });
  });

  it("normalizes", () => {
    expect(parseFraction("4/8")).toEqual({ num: 1n, den: 2n });
    expect(normalize(-6n, -4n)).toEqual({ num: 3n, den: 2n });
  });

  it("rejects junk, zero and negative denominators", () => {
    expect(() => parseFraction("1/0")).toThrow();
    expect(() => parseFraction("abc")).toThrow();
    expect(() => parseFraction("1.2.3")).toThrow();
    expect(() => parseFraction("")).toThrow();
    expect(() => parseFraction("-6/-4")).toThrow();
  });
});

describe("round trips", () => {
  it("print/parse is exact", () => {
    for (const text of ["1/8", "-49/1152", "3/256", "0", "7", "-5/2048"]) {
      expect(formatFraction(parseFraction(text))).toBe(canonical(text));
      expect(fracEquals(text, canonical(text))).toBe(true);
    }
  });

  it("decimal forms canonicalize to fractions", () => {
    expect(canonical("0.125")).toBe("1/8");
    expect(canonical("1.0")).toBe("1");
  });
});

describe("helpers", () => {
  it("isZero", () => {
    expect(isZero("0")).toBe(true);
    expect(isZero("0/9")).toBe(true);
    expect(isZero("1/9")).toBe(false);
  });

  it("toNumber", () => {
    expect(toNumber("1/8")).toBe(0.125);
    expect(toNumber("-1/2")).toBe(-0.5);
  });
});
