export interface Page {
  /** Build the static skeleton into `root`; called once per navigation. */
  mount(root: HTMLElement): void;
  /** Re-fetch and re-render; called on every poll tick while active. */
  refresh(): Promise<void>;
  anchor(): string;
}
