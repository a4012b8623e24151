// Pure chart logic: subset keys, tooltip text, ancestor chains, extremes.
// Everything here works on the service's layout JSON; no DOM, no layout math.

import type { HoverTarget, LayoutJson, LineJson } from './types.js';

/** Stable lookup key for a feature list (feature names may contain commas). */
export const subsetKey = (features: string[]): string => JSON.stringify(features);

/** Hover text, feature path outermost-first: "features: F4, F2, F1 — performance: 0.873" */
export function tooltipText(features: string[], performance: number): string {
  return `features: ${features.join(', ')} — performance: ${performance.toFixed(3)}`;
}

export function linesByKey(layout: LayoutJson): Map<string, LineJson> {
  const map = new Map<string, LineJson>();
  for (const line of layout.lines) map.set(subsetKey(line.features), line);
  return map;
}

export interface Chain {
  lineKeys: Set<string>; // the line plus every ancestor line
  arcFeatures: Set<string>; // arcs of all the subset's features
}

/**
 * The visual chain of one model: its line, all ancestor lines reached by
 * following `parent` links inward, and the arcs of its features.  For an
 * arc target the chain is just that arc.  A missing parent line (possible
 * with incomplete tables) ends the walk early.
 */
export function chainFor(target: HoverTarget, layout: LayoutJson): Chain {
  const arcFeatures = new Set(target.features);
  const lineKeys = new Set<string>();
  if (target.kind === 'line') {
    const byKey = linesByKey(layout);
    let current = byKey.get(subsetKey(target.features));
    while (current !== undefined) {
      lineKeys.add(subsetKey(current.features));
      current = current.parent === null ? undefined : byKey.get(subsetKey(current.parent));
    }
  }
  return { lineKeys, arcFeatures };
}

/**
 * The best- or worst-performing model in the layout.  Arcs (singleton
 * models, innermost first) are scanned before lines (creation order), and
 * only a strictly better score displaces the incumbent, so ties go to the
 * first model in canonical order.
 */
export function pickExtreme(layout: LayoutJson, which: 'best' | 'worst'): HoverTarget {
  let winner: HoverTarget | null = null;
  const better = (a: number, b: number) => (which === 'best' ? a > b : a < b);
  for (const arc of layout.arcs) {
    if (winner === null || better(arc.performance, winner.performance)) {
      winner = { kind: 'arc', features: [arc.feature], performance: arc.performance };
    }
  }
  for (const line of layout.lines) {
    if (winner === null || better(line.performance, winner.performance)) {
      winner = { kind: 'line', features: line.features, performance: line.performance };
    }
  }
  if (winner === null) throw new Error('layout has no models');
  return winner;
}

/**
 * SVG path for a feature arc, from the service-provided radius and extent.
 * Presentation-only trigonometry: angles start at 3 o'clock and grow
 * counterclockwise, the same convention the service's cartesian fields use.
 */
export function arcPathD(
  radius: number,
  extentDeg: number,
  cx: number,
  cy: number,
): string {
  const point = (deg: number): [number, number] => {
    const rad = (deg * Math.PI) / 180;
    return [cx + radius * Math.cos(rad), cy - radius * Math.sin(rad)];
  };
  const [x0, y0] = point(0);
  if (extentDeg >= 360) {
    const [xh, yh] = point(180);
    return `M ${x0} ${y0} A ${radius} ${radius} 0 1 0 ${xh} ${yh} A ${radius} ${radius} 0 1 0 ${x0} ${y0}`;
  }
  const [x1, y1] = point(extentDeg);
  const large = extentDeg > 180 ? 1 : 0;
  return `M ${x0} ${y0} A ${radius} ${radius} 0 ${large} 0 ${x1} ${y1}`;
}
