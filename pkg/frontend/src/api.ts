import type { ImportanceEntry, LayoutJson, ModelTableJson } from './types.js';

async function parseJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    throw new Error(`${response.status} ${response.statusText}`);
  }
  return response.json() as Promise<T>;
}

export const layoutUrl = (spanning: number, width: number, base = ''): string =>
  `${base}/api/layout?spanning=${encodeURIComponent(spanning)}&width=${encodeURIComponent(width)}`;

export const apiClient = {
  fetchLayout: (spanning: number, width: number, base = ''): Promise<LayoutJson> =>
    fetch(layoutUrl(spanning, width, base)).then((r) => parseJson<LayoutJson>(r)),

  fetchTable: (base = ''): Promise<ModelTableJson> =>
    fetch(`${base}/api/table`).then((r) => parseJson<ModelTableJson>(r)),

  fetchImportance: (base = ''): Promise<ImportanceEntry[]> =>
    fetch(`${base}/api/importance`).then((r) => parseJson<ImportanceEntry[]>(r)),
};
