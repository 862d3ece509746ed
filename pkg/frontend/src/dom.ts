// Small DOM builders; no templating library, matching the plain-page style of
// the rest of the stack.

import { UNK, type Step } from "./api.js";

type Attrs = Record<string, string | ((ev: Event) => void)>;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === "function") {
      node.addEventListener(key.replace(/^on/, ""), value);
    } else if (key === "class") {
      node.className = value;
    } else {
      node.setAttribute(key, value);
    }
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

export function clear(node: HTMLElement): HTMLElement {
  node.replaceChildren();
  return node;
}

/** Decoded string with rejection positions highlighted. */
export function renderDecoded(text: string[]): HTMLElement {
  const span = el("span", { class: "decoded" });
  if (text.length === 0) {
    span.append(el("em", {}, "(empty)"));
    return span;
  }
  text.forEach((ch, i) => {
    if (i > 0) span.append(" ");
    span.append(el("span", { class: ch === UNK ? "char unk" : "char" }, ch));
  });
  return span;
}

/** Per-step top-k candidate table, probabilities exactly as served. */
export function stepsTable(steps: Step[]): HTMLElement {
  const table = el("table", { class: "steps" });
  const head = el("tr", {}, el("th", {}, "#"), el("th", {}, "decoded"), el("th", {}, "candidates"));
  table.append(head);
  steps.forEach((step, i) => {
    const cands = step.candidates
      .map(([c, p]) => `${c} ${formatProb(p)}`)
      .join("  ");
    table.append(
      el(
        "tr",
        {},
        el("td", {}, String(i + 1)),
        el("td", { class: step.char_id === UNK ? "unk" : "" }, `${step.char_id} ${formatProb(step.prob)}`),
        el("td", { class: "cands" }, cands),
      ),
    );
  });
  return table;
}

export function formatProb(p: number): string {
  return p.toFixed(3);
}

export function banner(kind: "error" | "info" | "warn", message: string): HTMLElement {
  return el("div", { class: `banner ${kind}` }, message);
}
