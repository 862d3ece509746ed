// Single env-style setting: where the service lives and the admin token.
// Deployments set window.CONSOLE_ENV in index.html (or a test injects it);
// anything unset falls back to same-origin and an empty token.

export type ConsoleEnv = {
  baseUrl: string;
  adminToken: string;
};

declare global {
  interface Window {
    CONSOLE_ENV?: Partial<ConsoleEnv>;
  }
}

const DEFAULTS: ConsoleEnv = { baseUrl: "", adminToken: "" };

export function loadEnv(): ConsoleEnv {
  const given = (typeof window !== "undefined" && window.CONSOLE_ENV) || {};
  return {
    baseUrl: (given.baseUrl ?? DEFAULTS.baseUrl).replace(/\/+$/, ""),
    adminToken: given.adminToken ?? DEFAULTS.adminToken,
  };
}
