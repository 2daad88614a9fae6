import { defineConfig } from 'vitest/config';

export default defineConfig({
  test: {
    globalSetup: './tests/live-server.ts',
    environment: 'node',
    // one service instance backs the whole run; feedback ids are only
    // predictable when test files do not interleave their posts
    fileParallelism: false,
    testTimeout: 30000,
    hookTimeout: 60000,
  },
});
