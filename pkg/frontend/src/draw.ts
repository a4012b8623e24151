// DOM rendering of a layout: one <path> per arc, one <line> per model line,
// all coordinates straight from the service response.

import { arcPathD, chainFor, subsetKey } from './chart.js';
import type { HoverTarget, LayoutJson } from './types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';

export interface ChartHooks {
  onHover: (target: HoverTarget, event: MouseEvent) => void;
  onLeave: () => void;
}

export interface ChartHandle {
  layout: LayoutJson;
  elements: Map<string, SVGElement>; // subset key -> drawn element
  highlight: (target: HoverTarget | null) => void;
}

export function drawLayout(
  svg: SVGSVGElement,
  layout: LayoutJson,
  hooks: ChartHooks,
): ChartHandle {
  while (svg.firstChild) svg.removeChild(svg.firstChild);
  const { canvas_width: width, canvas_height: height } = layout.config;
  svg.setAttribute('viewBox', `0 0 ${width} ${height}`);
  const cx = width / 2;
  const cy = height / 2;

  const elements = new Map<string, SVGElement>();

  const wire = (element: SVGElement, target: HoverTarget) => {
    element.classList.add('model');
    element.addEventListener('mousemove', (event) => hooks.onHover(target, event));
    element.addEventListener('mouseleave', () => hooks.onLeave());
    elements.set(subsetKey(target.features), element);
  };

  for (const arc of layout.arcs) {
    const path = document.createElementNS(SVG_NS, 'path');
    path.setAttribute('d', arcPathD(arc.radius, arc.extent_deg, cx, cy));
    path.setAttribute('fill', 'none');
    path.setAttribute('stroke', arc.colour_hex);
    path.setAttribute('stroke-width', String(arc.width_px));
    path.dataset.kind = 'arc';
    wire(path, { kind: 'arc', features: [arc.feature], performance: arc.performance });
    svg.appendChild(path);

    const label = document.createElementNS(SVG_NS, 'text');
    const [lx, ly] = labelPosition(arc.radius, arc.extent_deg, cx, cy);
    label.setAttribute('x', String(lx));
    label.setAttribute('y', String(ly));
    label.classList.add('arc-label');
    label.textContent = arc.feature;
    svg.appendChild(label);
  }

  for (const line of layout.lines) {
    const el = document.createElementNS(SVG_NS, 'line');
    el.setAttribute('x1', String(line.start.x));
    el.setAttribute('y1', String(line.start.y));
    el.setAttribute('x2', String(line.end.x));
    el.setAttribute('y2', String(line.end.y));
    el.setAttribute('stroke', line.colour_hex);
    el.setAttribute('stroke-width', String(line.width_px));
    el.setAttribute('stroke-linecap', 'round');
    el.dataset.kind = 'line';
    wire(el, { kind: 'line', features: line.features, performance: line.performance });
    svg.appendChild(el);
  }

  const highlight = (target: HoverTarget | null) => {
    if (target === null) {
      for (const element of elements.values()) {
        element.classList.remove('dimmed', 'emphasized');
      }
      return;
    }
    const chain = chainFor(target, layout);
    for (const [key, element] of elements) {
      const kind = element.dataset.kind;
      const inChain =
        kind === 'line'
          ? chain.lineKeys.has(key)
          : chain.arcFeatures.has(JSON.parse(key)[0] as string);
      element.classList.toggle('emphasized', inChain);
      element.classList.toggle('dimmed', !inChain);
    }
  };

  return { layout, elements, highlight };
}

function labelPosition(
  radius: number,
  extentDeg: number,
  cx: number,
  cy: number,
): [number, number] {
  const deg = Math.min(extentDeg, 360) + (8 / radius) * (180 / Math.PI);
  const rad = (deg * Math.PI) / 180;
  return [cx + radius * Math.cos(rad), cy - radius * Math.sin(rad)];
}
