/** Backend connectivity indicator fed by the health endpoint. */

import type { ApiClient } from "./api";

export async function renderBackendStatus(container: HTMLElement, api: ApiClient): Promise<void> {
  container.classList.add("backend-status");
  try {
    const health = await api.health();
    container.classList.remove("status-down");
    container.classList.add("status-ok");
    container.textContent = `connected · snapshot ${health.snapshot_checksum.slice(0, 12)}`;
    container.title = `snapshot checksum ${health.snapshot_checksum}`;
  } catch {
    container.classList.remove("status-ok");
    container.classList.add("status-down");
    container.textContent = "backend unreachable";
  }
}
