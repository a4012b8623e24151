// Viewer wiring: slider-driven re-layout, tooltips, chain highlighting,
// best/worst model location.  All geometry comes from the layout service.

import { apiClient } from './api.js';
import { pickExtreme, tooltipText } from './chart.js';
import { drawLayout, type ChartHandle } from './draw.js';
import { LayoutRequester } from './state.js';
import type { HighlightMode, HoverTarget, LayoutJson, ViewState } from './types.js';

const CHART_WIDTH = 600;

const $ = <T extends HTMLElement>(id: string): T => {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing #${id}`);
  return element as T;
};

const svg = $('chart') as unknown as SVGSVGElement;
const slider = $<HTMLInputElement>('spanning');
const readout = $('spanning-value');
const banner = $('banner');
const tooltip = $('tooltip');
const info = $('info');

const state: ViewState = {
  spanning: Number(slider.value),
  hovered: null,
  highlightMode: 'none',
};
let chart: ChartHandle | null = null;

function applyModeHighlight(): void {
  if (!chart) return;
  if (state.highlightMode === 'best' || state.highlightMode === 'worst') {
    chart.highlight(pickExtreme(chart.layout, state.highlightMode));
  } else {
    chart.highlight(null);
  }
}

function showTooltip(target: HoverTarget, event: MouseEvent): void {
  tooltip.textContent = tooltipText(target.features, target.performance);
  tooltip.style.display = 'block';
  tooltip.style.left = `${event.pageX + 14}px`;
  tooltip.style.top = `${event.pageY + 14}px`;
}

function hideTooltip(): void {
  tooltip.style.display = 'none';
}

function applyLayout(layout: LayoutJson): void {
  banner.style.display = 'none';
  chart = drawLayout(svg, layout, {
    onHover: (target, event) => {
      showTooltip(target, event);
      chart?.highlight(target); // transient chain emphasis while hovering
    },
    onLeave: () => {
      hideTooltip();
      applyModeHighlight(); // fall back to the sticky mode, if any
    },
  });
  applyModeHighlight();
}

function showError(error: unknown): void {
  banner.textContent = `layout request failed: ${String(error)} — showing the last chart`;
  banner.style.display = 'block';
}

const requester = new LayoutRequester(
  (spanning) => apiClient.fetchLayout(spanning, CHART_WIDTH),
  applyLayout,
  showError,
  100,
);

slider.addEventListener('input', () => {
  state.spanning = Number(slider.value);
  readout.textContent = `${state.spanning}°`;
  requester.request(state.spanning);
});

const setMode = (mode: HighlightMode) => {
  state.highlightMode = mode;
  applyModeHighlight();
};
$('best').addEventListener('click', () => setMode('best'));
$('worst').addEventListener('click', () => setMode('worst'));
$('clear').addEventListener('click', () => setMode('none'));

readout.textContent = `${state.spanning}°`;
requester.issue(state.spanning);

Promise.all([apiClient.fetchTable(), apiClient.fetchImportance()]).then(
  ([table, importance]) => {
    const top = importance[0];
    const meta = table.meta?.algorithm ? ` · ${table.meta.algorithm}` : '';
    info.textContent =
      `${table.models.length} models over ${table.features.length} features${meta} · ` +
      `strongest feature: ${top.feature} (mean ${top.mean_performance.toFixed(3)})`;
  },
  () => {
    info.textContent = '';
  },
);
