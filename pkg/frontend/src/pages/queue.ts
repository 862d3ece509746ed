// Review queue: pending rejections as cards with the stored decode, per-step
// candidates, and the register / ignore actions. Registration is the spec'd
// three-step dance: PUT the glyph, re-run the record against the new bank,
// then mark the record registered.

import { ApiClient, ApiError, base64ToBlob, pngDataUrl } from "../api.js";
import type { AtlasItem, RejectionRecord, RerunResult } from "../api.js";
import { banner, clear, el, renderDecoded, stepsTable } from "../dom.js";
import type { Page } from "./page.js";

const PAGE_SIZE = 10;

export class QueuePage implements Page {
  private root!: HTMLElement;
  private list!: HTMLElement;
  private pager!: HTMLElement;
  private resultPanel!: HTMLElement;
  private page = 0;
  private total = 0;
  private signature = "";
  private images = new Map<string, string>();
  private atlasItems: AtlasItem[] = [];

  constructor(private readonly api: ApiClient) {}

  anchor(): string {
    return "queue";
  }

  mount(root: HTMLElement): void {
    this.root = root;
    this.signature = "";
    this.resultPanel = el("div", { class: "rerun-panel" });
    this.list = el("div", { class: "cards" });
    this.pager = el("div", { class: "pager" });
    clear(root).append(el("h2", {}, "Pending rejections"), this.resultPanel, this.list, this.pager);
  }

  async refresh(): Promise<void> {
    const page = await this.api.listRejections("pending", this.page, PAGE_SIZE);
    if (page.items.length === 0 && this.page > 0) {
      this.page -= 1; // last record of the page was resolved; step back
      return this.refresh();
    }
    this.total = page.total;
    const signature = JSON.stringify(page.items.map((r) => [r.record_id, r.status]).concat([[String(page.total), String(this.page)]]));
    if (signature === this.signature) return;
    this.signature = signature;
    await Promise.all([this.loadImages(page.items), this.loadAtlas()]);
    this.render(page.items);
  }

  private async loadImages(items: RejectionRecord[]): Promise<void> {
    const missing = items.filter((r) => !this.images.has(r.record_id));
    await Promise.all(
      missing.map(async (r) => {
        const img = await this.api.rejectionImage(r.record_id);
        this.images.set(r.record_id, img.png_base64);
      }),
    );
  }

  private async loadAtlas(): Promise<void> {
    const atlas = await this.api.atlas();
    this.atlasItems = atlas.items;
  }

  private render(items: RejectionRecord[]): void {
    clear(this.list);
    if (items.length === 0) {
      this.list.append(el("p", { class: "empty" }, "No pending rejections."));
    }
    for (const record of items) {
      this.list.append(this.card(record));
    }
    clear(this.pager);
    const pages = Math.max(1, Math.ceil(this.total / PAGE_SIZE));
    if (pages > 1) {
      this.pager.append(
        el("button", { onclick: () => this.turn(-1) }, "prev"),
        el("span", {}, ` page ${this.page + 1} of ${pages} `),
        el("button", { onclick: () => this.turn(1) }, "next"),
      );
    }
  }

  private turn(step: number): void {
    const pages = Math.max(1, Math.ceil(this.total / PAGE_SIZE));
    this.page = Math.min(Math.max(this.page + step, 0), pages - 1);
    this.signature = "";
    void this.refresh();
  }

  private card(record: RejectionRecord): HTMLElement {
    const error = el("div", { class: "inline-error" });
    const charInput = el("input", { type: "text", placeholder: "character id", class: "char-id" });
    const fileInput = el("input", { type: "file", accept: "image/png" });
    const atlasPick = el("select", { class: "atlas-pick" });
    atlasPick.append(el("option", { value: "" }, "pick from atlas…"));
    for (const item of this.atlasItems) {
      const label = item.registered ? `${item.char_id} (registered)` : item.char_id;
      atlasPick.append(el("option", { value: item.char_id }, label));
    }
    atlasPick.addEventListener("change", () => {
      if (atlasPick.value && !charInput.value) charInput.value = atlasPick.value;
    });

    const png = this.images.get(record.record_id);
    const img = png
      ? el("img", { src: pngDataUrl(png), alt: record.record_id, class: "sample" })
      : el("span", { class: "sample missing" }, "image unavailable");

    return el(
      "div",
      { class: "card", "data-record": record.record_id },
      el(
        "div",
        { class: "card-head" },
        el("strong", {}, record.record_id),
        el("span", { class: "muted" }, ` rejected at bank v${record.bank_version} · ${new Date(record.timestamp * 1000).toLocaleTimeString()}`),
      ),
      img,
      el("div", {}, "decoded: ", renderDecoded(record.decoded)),
      stepsTable(record.steps),
      el(
        "div",
        { class: "actions" },
        charInput,
        fileInput,
        atlasPick,
        el("button", { class: "register", onclick: () => void this.register(record, charInput, fileInput, atlasPick, error) }, "register"),
        el("button", { class: "ignore", onclick: () => void this.ignore(record, error) }, "ignore"),
      ),
      error,
    );
  }

  private async glyphBlob(fileInput: HTMLInputElement, atlasPick: HTMLSelectElement): Promise<Blob | null> {
    const file = fileInput.files?.[0];
    if (file) return file;
    if (atlasPick.value) {
      const item = this.atlasItems.find((a) => a.char_id === atlasPick.value);
      if (item) return base64ToBlob(item.png_base64);
    }
    return null;
  }

  private async register(
    record: RejectionRecord,
    charInput: HTMLInputElement,
    fileInput: HTMLInputElement,
    atlasPick: HTMLSelectElement,
    error: HTMLElement,
  ): Promise<void> {
    clear(error);
    const charId = charInput.value.trim();
    if (!charId) {
      error.append(banner("error", "enter a character id"));
      return;
    }
    const glyph = await this.glyphBlob(fileInput, atlasPick);
    if (!glyph) {
      error.append(banner("error", "choose a glyph image (upload or atlas pick)"));
      return;
    }
    try {
      await this.api.registerCharacter(charId, glyph);
      const rerun = await this.api.rerun(record.record_id);
      this.showRerun(charId, rerun);
      await this.api.setStatus(record.record_id, "registered");
    } catch (err) {
      if (err instanceof ApiError) {
        error.append(banner("error", err.detail)); // e.g. duplicate id; record stays pending
        return;
      }
      throw err;
    }
    this.signature = "";
    await this.refresh();
  }

  private async ignore(record: RejectionRecord, error: HTMLElement): Promise<void> {
    clear(error);
    try {
      await this.api.setStatus(record.record_id, "ignored");
    } catch (err) {
      if (err instanceof ApiError) {
        error.append(banner("error", err.detail));
        return;
      }
      throw err;
    }
    this.signature = "";
    await this.refresh();
  }

  /** Side-by-side before/after decode for the most recent registration. */
  private showRerun(charId: string, rerun: RerunResult): void {
    clear(this.resultPanel).append(
      el(
        "div",
        { class: "rerun", "data-record": rerun.record_id },
        el("h3", {}, `registered "${charId}" — re-run of ${rerun.record_id}`),
        el(
          "div",
          { class: "before-after" },
          el(
            "div",
            { class: "before" },
            el("h4", {}, `before (bank v${rerun.before.bank_version})`),
            renderDecoded(rerun.before.text),
          ),
          el(
            "div",
            { class: "after" },
            el("h4", {}, `after (bank v${rerun.after.bank_version})`),
            renderDecoded(rerun.after.text),
            stepsTable(rerun.after.steps),
          ),
        ),
      ),
    );
  }
}
