import init, { circulant, rect_grid, tri_grid, classify } from "./pkg/balanceable_web.js";

const canvas = document.getElementById("view");
const ctx = canvas.getContext("2d");
const info = document.getElementById("info");
const $ = (id) => document.getElementById(id);
const num = (id) => parseInt($(id).value, 10);

function draw(scene) {
  const { positions, edges } = scene;
  const x = new Set(scene.cut_side);
  const w = new Set(scene.induced_set);
  const indep = new Set(scene.independent_set);

  const xs = positions.map((p) => p[0]);
  const ys = positions.map((p) => p[1]);
  const [minX, maxX, minY, maxY] = [Math.min(...xs), Math.max(...xs), Math.min(...ys), Math.max(...ys)];
  const pad = 30;
  const scale = Math.min(
    (canvas.width - 2 * pad) / Math.max(maxX - minX, 1e-9),
    (canvas.height - 2 * pad) / Math.max(maxY - minY, 1e-9),
  );
  const at = (v) => [
    pad + (positions[v][0] - minX) * scale + (canvas.width - 2 * pad - (maxX - minX) * scale) / 2,
    pad + (positions[v][1] - minY) * scale + (canvas.height - 2 * pad - (maxY - minY) * scale) / 2,
  ];

  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (const [u, v] of edges) {
    const cut = x.size > 0 && x.has(u) !== x.has(v);
    const inside = w.has(u) && w.has(v);
    ctx.strokeStyle = cut ? "#d1495b" : inside ? "#30638e" : "#bbb";
    ctx.lineWidth = cut || inside ? 2 : 1;
    ctx.beginPath();
    ctx.moveTo(...at(u));
    ctx.lineTo(...at(v));
    ctx.stroke();
  }
  const r = Math.max(3, Math.min(9, 200 / Math.sqrt(positions.length + 1)));
  positions.forEach((_, v) => {
    const [px, py] = at(v);
    ctx.beginPath();
    ctx.arc(px, py, r, 0, 2 * Math.PI);
    ctx.fillStyle = x.has(v) ? "#d1495b" : w.has(v) ? "#edae49" : "#fff";
    ctx.fill();
    ctx.lineWidth = indep.has(v) ? 3 : 1;
    ctx.strokeStyle = indep.has(v) ? "#00798c" : "#555";
    ctx.stroke();
  });

  const lines = [
    `${scene.title}: n = ${scene.n}, m = ${scene.m}`,
    `${scene.verdict}${scene.case ? " via " + scene.case : ""}`,
  ];
  if (scene.cut_edges !== null) lines.push(`X = [${scene.cut_side}]  cut edges ${scene.cut_edges}`);
  if (scene.induced_edges !== null) lines.push(`W = [${scene.induced_set}]  induced edges ${scene.induced_edges}`);
  if (scene.independent_set.length) lines.push(`I = [${scene.independent_set}]`);
  lines.push(...scene.notes);
  info.textContent = lines.join("\n");
}

function show(f) {
  try {
    draw(JSON.parse(f()));
  } catch (e) {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    info.textContent = `error: ${e}`;
  }
}

await init();
$("go-circulant").onclick = () => show(() => circulant(num("k"), num("l")));
$("go-grid").onclick = () =>
  show(() => ($("grid-kind").value === "rect" ? rect_grid(num("rows"), num("cols")) : tri_grid(num("rows"))));
$("go-classify").onclick = () => show(() => classify($("spec").value, num("budget")));
show(() => circulant(40, 8));
