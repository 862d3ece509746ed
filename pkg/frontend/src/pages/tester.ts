// Free-form sample tester: upload any image, see the decode the service
// returns. Rejected uploads land in the queue automatically and the result
// links back to the created record.

import { ApiClient, ApiError } from "../api.js";
import { banner, clear, el, renderDecoded, stepsTable } from "../dom.js";
import type { Page } from "./page.js";

export class TesterPage implements Page {
  private result!: HTMLElement;
  private file!: HTMLInputElement;

  constructor(private readonly api: ApiClient) {}

  anchor(): string {
    return "tester";
  }

  mount(root: HTMLElement): void {
    this.result = el("div", { class: "tester-result" });
    this.file = el("input", { type: "file", accept: "image/*" });
    clear(root).append(
      el("h2", {}, "Sample tester"),
      el(
        "div",
        { class: "tester-form" },
        this.file,
        el("button", { onclick: () => void this.run() }, "recognize"),
      ),
      this.result,
    );
  }

  async refresh(): Promise<void> {
    // nothing to poll; results stay until the next upload
  }

  private async run(): Promise<void> {
    clear(this.result);
    const file = this.file.files?.[0];
    if (!file) {
      this.result.append(banner("error", "choose an image first"));
      return;
    }
    let prediction;
    try {
      prediction = await this.api.recognize(file, file.name);
    } catch (err) {
      if (err instanceof ApiError) {
        this.result.append(banner("error", `${err.status}: ${err.detail}`));
        return;
      }
      throw err;
    }
    const verdict = prediction.rejected
      ? banner("warn", `rejected — queued as ${prediction.record_id}`)
      : banner("info", "recognized");
    this.result.append(
      verdict,
      el("div", {}, "decoded: ", renderDecoded(prediction.text)),
      el(
        "p",
        { class: "muted" },
        `expert ${prediction.expert} · length ${prediction.length} · bank v${prediction.bank_version}`,
      ),
      stepsTable(prediction.steps),
    );
  }
}
