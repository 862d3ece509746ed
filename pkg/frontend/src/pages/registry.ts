// Registered-character table with glyph thumbnails, prefix search, and the
// unregister control. Characters registered from uploads have no atlas entry,
// so thumbnails are best-effort.

import { ApiClient, ApiError, pngDataUrl } from "../api.js";
import type { AtlasItem } from "../api.js";
import { banner, clear, el } from "../dom.js";
import type { Page } from "./page.js";

export class RegistryPage implements Page {
  private root!: HTMLElement;
  private table!: HTMLElement;
  private status!: HTMLElement;
  private search!: HTMLInputElement;
  private chars: string[] = [];
  private thumbs = new Map<string, string>();
  private signature = "";

  constructor(private readonly api: ApiClient) {}

  anchor(): string {
    return "registry";
  }

  mount(root: HTMLElement): void {
    this.root = root;
    this.signature = "";
    this.status = el("div", { class: "registry-status" });
    this.search = el("input", {
      type: "search",
      placeholder: "filter by id prefix",
      oninput: () => this.render(),
    });
    this.table = el("div", { class: "registry" });
    clear(root).append(el("h2", {}, "Registered characters"), this.status, this.search, this.table);
  }

  async refresh(): Promise<void> {
    const [bank, atlas] = await Promise.all([this.api.bank(), this.api.atlas()]);
    const signature = `${bank.bank_version}:${bank.chars.join(",")}`;
    if (signature === this.signature) return;
    this.signature = signature;
    this.chars = bank.chars;
    this.thumbs = new Map(atlas.items.map((a: AtlasItem) => [a.char_id, a.png_base64]));
    this.render();
  }

  private render(): void {
    clear(this.status);
    if (this.chars.length === 0) {
      this.status.append(banner("warn", "Bank is empty — recognition is disabled until a character is registered."));
    }
    const prefix = this.search.value.trim();
    const rows = this.chars.filter((c) => c.startsWith(prefix));
    const table = el("table", { class: "bank" });
    table.append(el("tr", {}, el("th", {}, "glyph"), el("th", {}, "character id"), el("th", {}, "")));
    for (const charId of rows) {
      const png = this.thumbs.get(charId);
      const thumb = png
        ? el("img", { src: pngDataUrl(png), class: "thumb", alt: charId })
        : el("span", { class: "thumb missing" }, "·");
      table.append(
        el(
          "tr",
          { "data-char": charId },
          el("td", {}, thumb),
          el("td", {}, charId),
          el("td", {}, el("button", { class: "unregister", onclick: () => void this.unregister(charId) }, "unregister")),
        ),
      );
    }
    clear(this.table).append(
      table,
      el("p", { class: "muted" }, `${rows.length} of ${this.chars.length} registered characters`),
    );
  }

  private async unregister(charId: string): Promise<void> {
    try {
      await this.api.unregisterCharacter(charId);
    } catch (err) {
      if (err instanceof ApiError) {
        clear(this.status).append(banner("error", err.detail));
        return;
      }
      throw err;
    }
    this.signature = "";
    await this.refresh();
  }
}
