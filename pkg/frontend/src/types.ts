// Shapes of the layout service's JSON responses.  The viewer draws exactly
// what these carry; it never re-derives layout quantities.

export interface PolarPointJson {
  angle_deg: number;
  radius: number;
  x: number;
  y: number;
}

export interface ArcJson {
  feature: string;
  radius: number;
  extent_deg: number;
  performance: number;
  width_px: number;
  colour_hex: string;
}

export interface LineJson {
  features: string[]; // outermost feature first
  performance: number;
  start: PolarPointJson;
  end: PolarPointJson;
  width_px: number;
  colour_hex: string;
  parent: string[] | null; // line this one starts from, outermost first
}

export interface LayoutConfigJson {
  arc_spanning: number;
  canvas_width: number;
  canvas_height: number;
  arc_extent_mode: string;
}

export interface LegendJson {
  domain_low: number;
  domain_high: number;
  stops: [number, string][];
}

export interface LayoutJson {
  config: LayoutConfigJson;
  arcs: ArcJson[];
  lines: LineJson[];
  legend: LegendJson;
}

export interface ModelJson {
  features: string[];
  performance: number;
}

export interface ModelTableJson {
  features: string[];
  models: ModelJson[];
  meta?: { algorithm?: string; dataset?: string };
}

export interface ImportanceEntry {
  feature: string;
  mean_performance: number;
}

export type HighlightMode = 'none' | 'chain' | 'best' | 'worst';

export interface ViewState {
  spanning: number; // slider-bound, 30..360
  hovered: string | null; // subset key of the hovered element
  highlightMode: HighlightMode;
}

/** A chart element the pointer can rest on. */
export interface HoverTarget {
  kind: 'arc' | 'line';
  features: string[]; // outermost first (single entry for arcs)
  performance: number;
}
