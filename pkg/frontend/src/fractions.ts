// Exact rational strings. The service computes with exact rationals, so the
// UI never converts tension parameters through floats; it validates,
// normalizes and displays them as fraction strings.

export interface Frac {
  num: bigint;
  den: bigint; // > 0
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function normalize(num: bigint, den: bigint): Frac {
  if (den === 0n) throw new Error("zero denominator");
  if (den < 0n) {
    num = -num;
    den = -den;
  }
  const d = gcd(num, den) || 1n;
  return { num: num / d, den: den / d };
}

const FRACTION_RE = /^([+-]?\d+)\s*\/\s*(\d+)$/;
const DECIMAL_RE = /^([+-]?)(\d+)(?:\.(\d+))?$/;

export function parseFraction(text: string): Frac {
  const trimmed = text.trim();
  let m = FRACTION_RE.exec(trimmed);
  if (m) {
    return normalize(BigInt(m[1]), BigInt(m[2]));
  }
  m = DECIMAL_RE.exec(trimmed);
  if (m) {
    const sign = m[1] === "-" ? -1n : 1n;
    const whole = BigInt(m[2]);
    const fracDigits = m[3] ?? "";
    const den = 10n ** BigInt(fracDigits.length);
    const num = sign * (whole * den + BigInt(fracDigits || "0"));
    return normalize(num, den);
  }
  throw new Error(`not a rational: ${JSON.stringify(text)}`);
}

export function formatFraction(f: Frac): string {
  return f.den === 1n ? f.num.toString() : `${f.num}/${f.den}`;
}

export function canonical(text: string): string {
  return formatFraction(parseFraction(text));
}

export function fracEquals(a: string, b: string): boolean {
  const fa = parseFraction(a);
  const fb = parseFraction(b);
  return fa.num === fb.num && fa.den === fb.den;
}

export function isZero(text: string): boolean {
  return parseFraction(text).num === 0n;
}

export function toNumber(text: string): number {
  const f = parseFraction(text);
  return Number(f.num) / Number(f.den);
}
