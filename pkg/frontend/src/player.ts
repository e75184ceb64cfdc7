// Embedded-player stand-in: the platform iframe is presentational, while the
// playback position that drives note anchoring is tracked locally and polled
// once per second.

export const POLL_INTERVAL_MS = 1000;

export class PositionTracker {
  private positionS = 0;
  private timer: ReturnType<typeof setInterval> | null = null;
  private listeners: Array<(positionS: number) => void> = [];

  constructor(private durationS: number) {}

  get position(): number {
    return this.positionS;
  }

  get playing(): boolean {
    return this.timer !== null;
  }

  onTick(listener: (positionS: number) => void): void {
    this.listeners.push(listener);
  }

  play(): void {
    if (this.timer !== null) return;
    this.timer = setInterval(() => {
      this.positionS = Math.min(this.durationS, this.positionS + 1);
      for (const listener of this.listeners) listener(this.positionS);
      if (this.positionS >= this.durationS) this.pause();
    }, POLL_INTERVAL_MS);
  }

  pause(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  seek(positionS: number): void {
    this.positionS = Math.max(0, Math.min(this.durationS, positionS));
    for (const listener of this.listeners) listener(this.positionS);
  }

  reset(durationS: number): void {
    this.pause();
    this.durationS = durationS;
    this.positionS = 0;
  }
}

export function embedUrl(videoId: string): string {
  return `https://www.youtube-nocookie.com/embed/${encodeURIComponent(videoId)}`;
}
