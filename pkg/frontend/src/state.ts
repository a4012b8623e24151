import type { LayoutJson } from './types.js';

/** Trailing-edge debouncer: only the last op scheduled within the window runs. */
export class Debouncer {
  private handle: ReturnType<typeof setTimeout> | undefined;

  constructor(readonly delayMs = 100) {}

  schedule(op: () => void): void {
    if (this.handle !== undefined) clearTimeout(this.handle);
    this.handle = setTimeout(() => {
      this.handle = undefined;
      op();
    }, this.delayMs);
  }

  cancel(): void {
    if (this.handle !== undefined) clearTimeout(this.handle);
    this.handle = undefined;
  }
}

/** Monotonic sequence numbers; a response is applied only if nothing newer won. */
export class SequenceGate {
  private issued = 0;
  private applied = 0;

  next(): number {
    return ++this.issued;
  }

  accept(seq: number): boolean {
    if (seq <= this.applied) return false;
    this.applied = seq;
    return true;
  }
}

/**
 * Debounced fetch-and-apply loop for layout requests.
 *
 * Rapid slider movement collapses to one request; out-of-order responses are
 * dropped so exactly one re-layout is applied per settled change
 * (last write wins).  Failures call onError and leave the last chart alone.
 */
export class LayoutRequester {
  private debouncer: Debouncer;
  private gate = new SequenceGate();
  fetchCount = 0;

  constructor(
    private fetchLayout: (spanning: number) => Promise<LayoutJson>,
    private apply: (layout: LayoutJson) => void,
    private onError: (error: unknown) => void = () => {},
    debounceMs = 100,
  ) {
    this.debouncer = new Debouncer(debounceMs);
  }

  request(spanning: number): void {
    this.debouncer.schedule(() => this.issue(spanning));
  }

  /** Fetch immediately, bypassing the debounce (initial load). */
  issue(spanning: number): void {
    const seq = this.gate.next();
    this.fetchCount += 1;
    this.fetchLayout(spanning).then(
      (layout) => {
        if (this.gate.accept(seq)) this.apply(layout);
      },
      (error) => {
        if (this.gate.accept(seq)) this.onError(error);
      },
    );
  }
}
