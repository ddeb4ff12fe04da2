import init, { nt_partition, branching_growth, colorcode_trials } from "./pkg/paramkit_demo.js";

const $ = (id) => document.getElementById(id);

function report(id, fn) {
  const out = $(id);
  out.classList.remove("err");
  try {
    fn(out);
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e.message || e);
  }
}

function clear(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  return ctx;
}

function drawNt() {
  report("nt-out", (out) => {
    const v = JSON.parse(nt_partition($("nt-graph").value, Number($("nt-k").value)));
    const canvas = $("nt-canvas");
    const ctx = clear(canvas);
    const cx = canvas.width / 2, cy = canvas.height / 2, r = Math.min(cx, cy) - 30;
    const pos = Array.from({ length: v.n }, (_, i) => {
      const a = (2 * Math.PI * i) / Math.max(v.n, 1) - Math.PI / 2;
      return [cx + r * Math.cos(a), cy + r * Math.sin(a)];
    });
    const color = new Array(v.n).fill("#9ab");
    v.half.forEach((x) => (color[x] = "#e9a93b"));
    v.one.forEach((x) => (color[x] = "#d33"));
    ctx.strokeStyle = "#bbb";
    for (const [a, b] of v.edges) {
      ctx.beginPath();
      ctx.moveTo(...pos[a]);
      ctx.lineTo(...pos[b]);
      ctx.stroke();
    }
    ctx.font = "11px system-ui";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    pos.forEach(([x, y], i) => {
      ctx.fillStyle = color[i];
      ctx.beginPath();
      ctx.arc(x, y, 11, 0, 2 * Math.PI);
      ctx.fill();
      ctx.fillStyle = "#fff";
      ctx.fillText(String(i + 1), x, y);
    });
    out.textContent =
      `|V1| = ${v.one.length}, |V½| = ${v.half.length}, |V0| = ${v.zero.length}; ` +
      `LP value ${v.lp_value}. Kernel for k = ${v.k}: ${v.kernel}.`;
  });
}

function axes(ctx, canvas, pad, yTicks, yLabel) {
  ctx.strokeStyle = "#888";
  ctx.fillStyle = "#555";
  ctx.font = "11px system-ui";
  ctx.beginPath();
  ctx.moveTo(pad, 10);
  ctx.lineTo(pad, canvas.height - pad);
  ctx.lineTo(canvas.width - 10, canvas.height - pad);
  ctx.stroke();
  ctx.textAlign = "right";
  for (const [y, label] of yTicks) ctx.fillText(label, pad - 4, y + 4);
  ctx.save();
  ctx.translate(12, canvas.height / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.textAlign = "center";
  ctx.fillText(yLabel, 0, 0);
  ctx.restore();
}

function polyline(ctx, pts, stroke, dash = []) {
  ctx.strokeStyle = stroke;
  ctx.setLineDash(dash);
  ctx.beginPath();
  pts.forEach(([x, y], i) => (i ? ctx.lineTo(x, y) : ctx.moveTo(x, y)));
  ctx.stroke();
  ctx.setLineDash([]);
}

function drawGrowth() {
  report("gr-out", (out) => {
    const rows = JSON.parse(branching_growth($("gr-graph").value, Number($("gr-k").value)));
    const canvas = $("gr-canvas");
    const ctx = clear(canvas);
    const pad = 44;
    const top = Math.max(...rows.map((r) => Math.max(r.edge_bound, r.degree_bound, r.edge, r.path, r.degree)));
    const lg = (x) => Math.log10(Math.max(x, 1));
    const w = canvas.width - pad - 20, h = canvas.height - pad - 20;
    const X = (k) => pad + 10 + (w * k) / Math.max(rows.length - 1, 1);
    const Y = (x) => canvas.height - pad - (h * lg(x)) / Math.max(lg(top), 1);
    const ticks = [];
    for (let e = 0; e <= Math.ceil(lg(top)); e++) ticks.push([Y(10 ** e), `1e${e}`]);
    axes(ctx, canvas, pad, ticks, "nodes expanded (log)");
    ctx.textAlign = "center";
    rows.forEach((r) => ctx.fillText(`k=${r.k}`, X(r.k), canvas.height - pad + 14));
    polyline(ctx, rows.map((r) => [X(r.k), Y(r.edge_bound)]), "#999", [4, 3]);
    polyline(ctx, rows.map((r) => [X(r.k), Y(r.degree_bound)]), "#999", [1, 3]);
    polyline(ctx, rows.map((r) => [X(r.k), Y(r.edge)]), "#36c");
    polyline(ctx, rows.map((r) => [X(r.k), Y(r.path)]), "#393");
    polyline(ctx, rows.map((r) => [X(r.k), Y(r.degree)]), "#c39");
    const first = rows.find((r) => r.answer);
    out.textContent = first
      ? `Smallest k with a cover: ${first.k}. Dashed: 2^(k+1); dotted: 8·1.4656^k.`
      : `No cover of size at most ${rows.length - 1}. Dashed: 2^(k+1); dotted: 8·1.4656^k.`;
  });
}

function drawTrials() {
  report("cc-out", (out) => {
    const v = JSON.parse(
      colorcode_trials($("cc-graph").value, Number($("cc-k").value), Number($("cc-runs").value), BigInt($("cc-seed").value))
    );
    const canvas = $("cc-canvas");
    const ctx = clear(canvas);
    const pad = 44;
    const w = canvas.width - pad - 20, h = canvas.height - pad - 20;
    const n = v.success.length;
    const X = (t) => pad + 10 + (w * t) / Math.max(n - 1, 1);
    const Y = (p) => canvas.height - pad - h * p;
    axes(ctx, canvas, pad, [0, 0.25, 0.5, 0.75, 1].map((p) => [Y(p), p.toFixed(2)]), "P(success)");
    ctx.textAlign = "center";
    for (const t of [0, Math.floor((n - 1) / 2), n - 1]) ctx.fillText(`${t + 1} trials`, X(t), canvas.height - pad + 14);
    polyline(ctx, v.guarantee.map((p, t) => [X(t), Y(p)]), "#999", [4, 3]);
    polyline(ctx, v.success.map((p, t) => [X(t), Y(p)]), "#36c");
    const last = v.success[n - 1] ?? 0;
    out.textContent =
      `${v.runs} runs, ${v.trials_planned} trials planned for δ = 0.01; ` +
      `${(100 * last).toFixed(1)}% of runs succeeded within the plan.`;
  });
}

await init();
$("nt-run").onclick = drawNt;
$("gr-run").onclick = drawGrowth;
$("cc-run").onclick = drawTrials;
drawNt();
drawGrowth();
drawTrials();
