// Shell: header with live bank version and online state, hash routing over
// the three pages, and the 2-second poll that keeps the active page fresh.

import { ApiClient } from "./api.js";
import { loadEnv } from "./config.js";
import { clear, el } from "./dom.js";
import { Poller } from "./poller.js";
import type { Page } from "./pages/page.js";
import { QueuePage } from "./pages/queue.js";
import { RegistryPage } from "./pages/registry.js";
import { TesterPage } from "./pages/tester.js";

export class App {
  readonly api: ApiClient;
  private pages: Page[];
  private active: Page;
  private main!: HTMLElement;
  private versionBadge!: HTMLElement;
  private offline!: HTMLElement;
  private poller: Poller;

  constructor(private readonly root: HTMLElement, pollMs = 2000) {
    this.api = new ApiClient(loadEnv());
    this.api.onBankVersion = (v) => this.showVersion(v);
    this.pages = [new QueuePage(this.api), new RegistryPage(this.api), new TesterPage(this.api)];
    this.active = this.pages[0];
    this.poller = new Poller(() => this.tick(), pollMs);
  }

  start(): void {
    this.versionBadge = el("span", { class: "badge version" }, "bank v?");
    this.offline = el("div", { class: "banner error offline hidden" }, "service unreachable — retrying");
    this.main = el("main", {});
    const nav = el(
      "nav",
      {},
      ...this.pages.map((p) => el("a", { href: `#/${p.anchor()}`, "data-page": p.anchor() }, p.anchor())),
    );
    clear(this.root).append(
      el("header", {}, el("h1", {}, "glyph console"), nav, this.versionBadge),
      this.offline,
      this.main,
    );
    window.addEventListener("hashchange", () => this.route());
    this.route();
    this.poller.start();
  }

  stop(): void {
    this.poller.stop();
  }

  private route(): void {
    const anchor = window.location.hash.replace(/^#\//, "") || "queue";
    const page = this.pages.find((p) => p.anchor() === anchor) ?? this.pages[0];
    this.active = page;
    for (const link of this.root.querySelectorAll("nav a")) {
      link.classList.toggle("current", link.getAttribute("data-page") === page.anchor());
    }
    page.mount(this.main);
    void this.tick();
  }

  private async tick(): Promise<void> {
    try {
      await this.api.bank(); // updates the badge through onBankVersion
      await this.active.refresh();
      this.offline.classList.add("hidden");
    } catch {
      this.offline.classList.remove("hidden");
    }
  }

  private showVersion(version: number): void {
    this.versionBadge.textContent = `bank v${version}`;
  }
}
