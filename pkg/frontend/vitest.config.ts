import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    globalSetup: ["./tests/globalSetup.ts"],
    include: ["tests/**/*.test.ts"],
    testTimeout: 30_000,
    hookTimeout: 30_000,
    pool: "forks",
    environmentOptions: {
      // integration tests talk to the spawned service on an ephemeral port
      happyDOM: { settings: { fetch: { disableSameOriginPolicy: true } } },
    },
  },
});
