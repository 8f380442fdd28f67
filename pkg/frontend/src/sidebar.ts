/**
 * Schema sidebar: what the graph can answer questions about.
 * Fetched once at startup; collapses to a warning when the fetch fails.
 */

import type { ApiClient } from "./api";

export async function renderSchemaSidebar(container: HTMLElement, api: ApiClient): Promise<void> {
  container.replaceChildren();
  let schema;
  try {
    schema = await api.schema();
  } catch {
    container.classList.add("sidebar-collapsed");
    const warning = document.createElement("p");
    warning.className = "sidebar-warning";
    warning.textContent = "schema unavailable";
    container.appendChild(warning);
    return;
  }
  container.classList.remove("sidebar-collapsed");

  const labels = Object.keys(schema.nodes);
  if (labels.length === 0 && schema.edges.length === 0) {
    const empty = document.createElement("p");
    empty.className = "sidebar-empty";
    empty.textContent = "the graph is empty";
    container.appendChild(empty);
    return;
  }

  const nodesHeading = document.createElement("h2");
  nodesHeading.textContent = "Node labels";
  container.appendChild(nodesHeading);
  const nodeList = document.createElement("ul");
  nodeList.className = "schema-nodes";
  for (const label of labels) {
    const item = document.createElement("li");
    const name = document.createElement("strong");
    name.textContent = label;
    item.appendChild(name);
    const props = document.createElement("span");
    props.className = "schema-props";
    props.textContent = ` ${(schema.nodes[label] ?? []).join(", ")}`;
    item.appendChild(props);
    nodeList.appendChild(item);
  }
  container.appendChild(nodeList);

  const edgesHeading = document.createElement("h2");
  edgesHeading.textContent = "Relationships";
  container.appendChild(edgesHeading);
  const edgeList = document.createElement("ul");
  edgeList.className = "schema-edges";
  for (const edge of schema.edges) {
    const item = document.createElement("li");
    item.textContent = `(${edge.from})-[:${edge.type}]->(${edge.to})`;
    edgeList.appendChild(item);
  }
  container.appendChild(edgeList);
}
