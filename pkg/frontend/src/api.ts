// Typed client for the recognizer service. Every endpoint reports the bank
// version it observed; the client remembers the latest one so the shell can
// show it and pages can refresh when it moves. No recognition math happens
// here — numbers are passed through exactly as the service returned them.

import type { ConsoleEnv } from "./config.js";

export const UNK = "<unk>";

export type Step = {
  char_id: string;
  prob: number;
  candidates: [string, number][];
};

export type PredictionResult = {
  text: string[];
  string: string;
  rejected: boolean;
  length: number;
  expert: string;
  steps: Step[];
  bank_version: number;
  record_id?: string | null;
};

export type RejectionRecord = {
  record_id: string;
  image_path: string;
  decoded: string[];
  steps: Step[];
  timestamp: number;
  status: "pending" | "registered" | "ignored";
  bank_version: number;
};

export type RejectionPage = {
  items: RejectionRecord[];
  total: number;
  page: number;
  page_size: number;
  bank_version: number;
};

export type RerunResult = {
  record_id: string;
  before: { text: string[]; bank_version: number };
  after: PredictionResult;
  bank_version: number;
};

export type BankView = {
  chars: string[];
  size: number;
  embed_dim: number;
  bank_version: number;
};

export type AtlasItem = { char_id: string; png_base64: string; registered: boolean };
export type AtlasView = { items: AtlasItem[]; bank_version: number };

export class ApiError extends Error {
  status: number;
  detail: string;

  constructor(status: number, detail: string) {
    super(`HTTP ${status}: ${detail}`);
    this.status = status;
    this.detail = detail;
  }
}

export class ApiClient {
  private base: string;
  private token: string;
  lastBankVersion: number | null = null;
  /** Shell hook: fires whenever a response carries a bank version. */
  onBankVersion?: (version: number) => void;

  constructor(env: ConsoleEnv) {
    this.base = env.baseUrl;
    this.token = env.adminToken;
  }

  private async request<T>(path: string, init: RequestInit = {}): Promise<T> {
    const resp = await fetch(this.base + path, init);
    const text = await resp.text();
    let body: any = null;
    try {
      body = text ? JSON.parse(text) : null;
    } catch {
      // non-JSON error page; fall through with the raw text as detail
    }
    if (!resp.ok) {
      const detail = body?.detail ?? text ?? resp.statusText;
      throw new ApiError(resp.status, String(detail));
    }
    if (body && typeof body.bank_version === "number") {
      this.lastBankVersion = body.bank_version;
      this.onBankVersion?.(body.bank_version);
    }
    return body as T;
  }

  private adminHeaders(): Record<string, string> {
    return { "x-admin-token": this.token };
  }

  recognize(image: Blob, filename = "sample.png"): Promise<PredictionResult> {
    const form = new FormData();
    form.append("image", image, filename);
    return this.request("/v1/recognize", { method: "POST", body: form });
  }

  listRejections(status?: string, page = 0, pageSize = 20): Promise<RejectionPage> {
    const q = new URLSearchParams({ page: String(page), page_size: String(pageSize) });
    if (status) q.set("status", status);
    return this.request(`/v1/rejections?${q}`);
  }

  rejectionImage(recordId: string): Promise<{ record_id: string; png_base64: string; bank_version: number }> {
    return this.request(`/v1/rejections/${recordId}/image`);
  }

  rerun(recordId: string): Promise<RerunResult> {
    return this.request(`/v1/rejections/${recordId}/rerun`, { method: "POST" });
  }

  setStatus(recordId: string, status: "registered" | "ignored"): Promise<{ record: RejectionRecord; bank_version: number }> {
    return this.request(`/v1/rejections/${recordId}`, {
      method: "PATCH",
      headers: { ...this.adminHeaders(), "content-type": "application/json" },
      body: JSON.stringify({ status }),
    });
  }

  registerCharacter(charId: string, glyph: Blob): Promise<{ char_id: string; bank_version: number; bank_size: number }> {
    const form = new FormData();
    form.append("glyph", glyph, "glyph.png");
    return this.request(`/v1/characters/${encodeURIComponent(charId)}`, {
      method: "PUT",
      headers: this.adminHeaders(),
      body: form,
    });
  }

  unregisterCharacter(charId: string): Promise<{ char_id: string; bank_version: number; bank_size: number }> {
    return this.request(`/v1/characters/${encodeURIComponent(charId)}`, {
      method: "DELETE",
      headers: this.adminHeaders(),
    });
  }

  bank(): Promise<BankView> {
    return this.request("/v1/bank");
  }

  atlas(): Promise<AtlasView> {
    return this.request("/v1/atlas");
  }
}

export function pngDataUrl(b64: string): string {
  return `data:image/png;base64,${b64}`;
}

export function base64ToBlob(b64: string): Blob {
  const raw = atob(b64);
  const bytes = new Uint8Array(raw.length);
  for (let i = 0; i < raw.length; i++) bytes[i] = raw.charCodeAt(i);
  return new Blob([bytes], { type: "image/png" });
}
