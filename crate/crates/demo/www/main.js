import init, { saddleCurve, densityCurve, objectiveCurve } from "./pkg/oddzeta_demo.js";

const $ = (id) => document.getElementById(id);

// series: [{xs, ys, color}], marks: [{x, color}] vertical lines, hline: y of a horizontal rule
function plot(canvas, series, { logX = false, marks = [], hline = null, xLabel = "", yLabel = "" } = {}) {
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height, pad = 48;
  ctx.clearRect(0, 0, W, H);
  const tx = (x) => (logX ? Math.log10(x) : x);
  const pts = series.flatMap((s) => s.xs.map((x, i) => [tx(x), s.ys[i]])).filter((p) => isFinite(p[0]) && isFinite(p[1]));
  if (!pts.length) return;
  let [x0, x1] = [Math.min(...pts.map((p) => p[0])), Math.max(...pts.map((p) => p[0]))];
  let ys = pts.map((p) => p[1]).concat(hline === null ? [] : [hline]);
  let [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  if (y0 === y1) { y0 -= 1; y1 += 1; }
  const px = (x) => pad + ((x - x0) / (x1 - x0)) * (W - 2 * pad);
  const py = (y) => H - pad + ((y0 - y) / (y1 - y0)) * (H - 2 * pad);

  ctx.strokeStyle = "#999"; ctx.lineWidth = 1;
  ctx.strokeRect(pad, pad, W - 2 * pad, H - 2 * pad);
  ctx.fillStyle = "#444"; ctx.font = "11px sans-serif";
  for (let k = 0; k <= 4; k++) {
    const xv = x0 + ((x1 - x0) * k) / 4, yv = y0 + ((y1 - y0) * k) / 4;
    ctx.fillText(logX ? `1e${xv.toFixed(0)}` : xv.toPrecision(3), px(xv) - 14, H - pad + 16);
    ctx.fillText(yv.toPrecision(4), 2, py(yv) + 4);
  }
  ctx.fillText(xLabel, W / 2, H - 8);
  ctx.fillText(yLabel, pad, pad - 8);

  if (hline !== null) {
    ctx.strokeStyle = "#bbb"; ctx.setLineDash([4, 4]);
    ctx.beginPath(); ctx.moveTo(pad, py(hline)); ctx.lineTo(W - pad, py(hline)); ctx.stroke();
    ctx.setLineDash([]);
  }
  for (const m of marks) {
    ctx.strokeStyle = m.color; ctx.setLineDash([2, 3]);
    ctx.beginPath(); ctx.moveTo(px(tx(m.x)), pad); ctx.lineTo(px(tx(m.x)), H - pad); ctx.stroke();
    ctx.setLineDash([]);
  }
  for (const s of series) {
    ctx.strokeStyle = s.color; ctx.lineWidth = 1.5; ctx.beginPath();
    let started = false;
    s.xs.forEach((x, i) => {
      const X = tx(x), Y = s.ys[i];
      if (!isFinite(X) || !isFinite(Y)) return;
      started ? ctx.lineTo(px(X), py(Y)) : ctx.moveTo(px(X), py(Y));
      started = true;
    });
    ctx.stroke();
  }
}

function guarded(infoId, fn) {
  return () => {
    const info = $(infoId);
    info.classList.remove("err");
    try {
      fn(info);
    } catch (e) {
      info.classList.add("err");
      info.textContent = String(e.message ?? e);
    }
  };
}

const saddle = guarded("sd-info", (info) => {
  const c = JSON.parse(saddleCurve($("sd-r").value, Number($("sd-s").value), $("sd-b").value, 400));
  plot($("sd-canvas"), [
    { xs: c.x, ys: c.log_f, color: "#1f77b4" },
    { xs: c.x, ys: c.log_g, color: "#d62728" },
  ], { logX: true, hline: 0, marks: [{ x: c.x0, color: "#2ca02c" }, { x: c.x1, color: "#999" }], xLabel: "x", yLabel: "log f (blue), log g (red)" });
  info.textContent =
    `x0 = ${c.x0.toExponential(6)}   x1 = ${c.x1.toExponential(6)}\n` +
    `log g(x0) = ${c.log_g_x0.toFixed(4)}   threshold -(s+1) = ${c.threshold}   criterion: ${c.criterion ? "holds" : "fails"}`;
});

const density = guarded("dn-info", (info) => {
  const c = JSON.parse(densityCurve(Number($("dn-max").value), Number($("dn-pts").value)));
  plot($("dn-canvas"), [{ xs: c.bound, ys: c.ratio, color: "#1f77b4" }], { hline: c.kappa, xLabel: "B", yLabel: "|Ψ_B| / B" });
  const n = c.bound.length - 1;
  info.textContent = `limit ζ(2)ζ(3)/ζ(6) = ${c.kappa.toFixed(8)}   at B = ${c.bound[n]}: |Ψ_B| = ${c.size[n]}, ratio ${c.ratio[n].toFixed(6)}`;
});

const objective = guarded("ob-info", (info) => {
  const c = JSON.parse(objectiveCurve(Number($("ob-lo").value), Number($("ob-hi").value), 400));
  plot($("ob-canvas"), [{ xs: c.r, ys: c.value, color: "#1f77b4" }], { marks: [{ x: c.r0, color: "#2ca02c" }], xLabel: "r", yLabel: "objective" });
  info.textContent = `r0 = ${c.r0.toFixed(8)}   max = ${c.max_value.toFixed(8)}   c0 = ${c.c0.toFixed(8)}`;
});

await init();
$("sd-go").onclick = saddle;
$("dn-go").onclick = density;
$("ob-go").onclick = objective;
saddle();
density();
objective();
