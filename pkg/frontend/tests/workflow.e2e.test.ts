// @vitest-environment node
//
// End-to-end workflow against a real service process: seed a model + bank
// whose rejection scale beats every cosine match (so any upload queues a
// record), then drive the console through queue -> register -> re-run and
// check the record leaves pending and the console's re-run response is
// byte-for-byte identical to one fetched straight from the API.
//
// Runs in the node environment (undici fetch/FormData/Blob) with a manually
// wired JSDOM, because the console and the service share one fetch here.
// Excluded from `npm run test:unit`; `npm test` runs it.

import { afterAll, beforeAll, describe, expect, it, vi } from "vitest";
import { execFileSync, spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { JSDOM } from "jsdom";
import { App } from "../src/app.js";

const PORT = 8941;
const BASE = `http://127.0.0.1:${PORT}`;
const TOKEN = "workflow-admin";

const here = dirname(fileURLToPath(import.meta.url));

let fixture: string;
let service: ChildProcess;
let serviceLog = "";

async function serviceReady(): Promise<void> {
  const deadline = Date.now() + 90_000;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE}/v1/bank`);
      if (resp.ok) return;
    } catch {
      // still booting
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error(`service did not come up on :${PORT}\n${serviceLog}`);
}

beforeAll(async () => {
  fixture = mkdtempSync(join(tmpdir(), "console-e2e-"));
  execFileSync("python3", [join(here, "seed_fixture.py"), fixture], { stdio: "inherit" });
  service = spawn("glyphmoe", [
    "serve",
    "--ckpt", join(fixture, "ckpt.npz"),
    "--bank", join(fixture, "bank.npz"),
    "--queue", join(fixture, "queue"),
    "--atlas", join(fixture, "atlas"),
    "--port", String(PORT),
    "--admin-token", TOKEN,
  ]);
  service.stdout?.on("data", (chunk) => (serviceLog += chunk));
  service.stderr?.on("data", (chunk) => (serviceLog += chunk));
  await serviceReady();
});

afterAll(async () => {
  service?.kill("SIGTERM");
  await new Promise((r) => setTimeout(r, 500));
  service?.kill("SIGKILL");
  rmSync(fixture, { recursive: true, force: true });
});

describe("queue -> register -> re-run workflow", () => {
  it("drives a seeded rejection out of pending; console re-run matches the API byte-for-byte", async () => {
    // A client submits a word of unregistered glyphs; the service queues it.
    const word = readFileSync(join(fixture, "word.png"));
    const form = new FormData();
    form.append("image", new Blob([word], { type: "image/png" }), "word.png");
    const submitted = await fetch(`${BASE}/v1/recognize`, { method: "POST", body: form }).then((r) => r.json());
    expect(submitted.rejected).toBe(true);
    const rid = submitted.record_id as string;
    expect(rid).toBeTruthy();

    // Console comes up against the live service, polling fast for the test.
    const dom = new JSDOM(`<div id="root"></div>`, { url: `${BASE}/` });
    (dom.window as any).CONSOLE_ENV = { baseUrl: BASE, adminToken: TOKEN };
    (globalThis as any).window = dom.window;
    (globalThis as any).document = dom.window.document;

    const realFetch = globalThis.fetch;
    const rerunBodies: string[] = [];
    (globalThis as any).fetch = async (input: any, init?: any) => {
      const resp = await realFetch(input, init);
      if (String(input).endsWith("/rerun")) rerunBodies.push(await resp.clone().text());
      return resp;
    };

    const root = dom.window.document.getElementById("root") as HTMLElement;
    const app = new App(root, 150);
    app.start();

    try {
      // The pending record appears as a card with the atlas picker populated.
      const card = await vi.waitFor(
        () => {
          const found = dom.window.document.querySelector(`.card[data-record="${rid}"]`);
          expect(found).toBeTruthy();
          expect(found!.querySelector('option[value="c008"]')).toBeTruthy();
          return found as HTMLElement;
        },
        { timeout: 30_000, interval: 100 },
      );

      // Register c008 from the atlas pick; the change handler fills the id box.
      const pick = card.querySelector("select.atlas-pick") as HTMLSelectElement;
      pick.value = "c008";
      pick.dispatchEvent(new dom.window.Event("change"));
      expect((card.querySelector("input.char-id") as HTMLInputElement).value).toBe("c008");
      (card.querySelector("button.register") as HTMLElement).click();

      // Before/after panel shows the bank version transition.
      await vi.waitFor(
        () => expect(dom.window.document.querySelector(`.rerun-panel .rerun[data-record="${rid}"]`)).toBeTruthy(),
        { timeout: 30_000, interval: 100 },
      );
      const panel = dom.window.document.querySelector(".rerun-panel .rerun")!;
      expect(panel.querySelector(".before h4")?.textContent).toBe("before (bank v8)");
      expect(panel.querySelector(".after h4")?.textContent).toBe("after (bank v9)");

      // The record leaves pending, in the UI and in the store.
      await vi.waitFor(
        () => {
          expect(dom.window.document.querySelector(`.card[data-record="${rid}"]`)).toBeNull();
          expect(dom.window.document.querySelector(".cards .empty")?.textContent).toBe("No pending rejections.");
        },
        { timeout: 30_000, interval: 100 },
      );
      const pending = await realFetch(`${BASE}/v1/rejections?status=pending`).then((r) => r.json());
      expect(pending.items).toEqual([]);
      const registered = await realFetch(`${BASE}/v1/rejections?status=registered`).then((r) => r.json());
      expect(registered.items.map((r: any) => r.record_id)).toContain(rid);

      // The console's re-run is exactly what the API returns when asked directly.
      expect(rerunBodies).toHaveLength(1);
      const direct = await realFetch(`${BASE}/v1/rejections/${rid}/rerun`, { method: "POST" }).then((r) => r.text());
      expect(rerunBodies[0]).toBe(direct);

      // Header badge picks up the new bank version within a poll cycle.
      await vi.waitFor(
        () => expect(dom.window.document.querySelector("span.badge.version")?.textContent).toBe("bank v9"),
        { timeout: 5_000, interval: 50 },
      );
    } finally {
      app.stop();
      (globalThis as any).fetch = realFetch;
      delete (globalThis as any).window;
      delete (globalThis as any).document;
    }
  });
});
