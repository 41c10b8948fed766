// SPDX-License-Identifier: Apache-2.0

import init, {
  closed_form_text, closed_form_value, inversion_text, sigma_curve, gauss_curve,
} from "./pkg/mtz_demo.js";

const $ = (id) => document.getElementById(id);

function show(id, text, isError = false) {
  const el = $(id);
  el.textContent = text;
  el.className = isError ? "err" : "";
}

// points: flat [x0, y0, x1, y1, ...]; x on a log axis, y linear or log
function plot(canvas, points, { logY = false, reference = null } = {}) {
  const ctx = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height, pad = 48;
  ctx.clearRect(0, 0, w, h);
  const xs = [], ys = [];
  for (let i = 0; i < points.length; i += 2) {
    if (logY && !(points[i + 1] > 0)) continue;
    xs.push(Math.log10(points[i]));
    ys.push(logY ? Math.log10(points[i + 1]) : points[i + 1]);
  }
  if (xs.length < 2) return;
  let yMin = Math.min(...ys), yMax = Math.max(...ys);
  if (reference !== null) { yMin = Math.min(yMin, reference); yMax = Math.max(yMax, reference); }
  if (yMax === yMin) yMax = yMin + 1;
  const xMax = Math.max(...xs, 1);
  const px = (x) => pad + (x / xMax) * (w - 2 * pad);
  const py = (y) => h - pad - ((y - yMin) / (yMax - yMin)) * (h - 2 * pad);

  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(pad, pad); ctx.lineTo(pad, h - pad); ctx.lineTo(w - pad, h - pad);
  ctx.stroke();
  ctx.fillStyle = "#444";
  ctx.font = "12px sans-serif";
  ctx.fillText("log10 S", w - pad - 40, h - pad + 30);
  const fmt = (y) => (logY ? "1e" + y.toFixed(1) : y.toPrecision(5));
  ctx.fillText(fmt(yMax), 2, pad);
  ctx.fillText(fmt(yMin), 2, h - pad);

  if (reference !== null) {
    ctx.strokeStyle = "#c33";
    ctx.setLineDash([5, 4]);
    ctx.beginPath();
    ctx.moveTo(pad, py(reference)); ctx.lineTo(w - pad, py(reference));
    ctx.stroke();
    ctx.setLineDash([]);
  }
  ctx.strokeStyle = "#1f5fbf";
  ctx.lineWidth = 2;
  ctx.beginPath();
  xs.forEach((x, i) => (i ? ctx.lineTo(px(x), py(ys[i])) : ctx.moveTo(px(x), py(ys[i]))));
  ctx.stroke();
  ctx.lineWidth = 1;
}

function closedForm() {
  const n = Number($("cf-n").value);
  try {
    let text = `zbar(${n}) = ${closed_form_text(n)}\n        ~ ${closed_form_value(n, 20)}`;
    if (n >= 2) text += `\n\n${inversion_text(n)}`;
    show("cf-out", text);
  } catch (e) {
    show("cf-out", String(e), true);
  }
}

function sigma() {
  const n = Number($("sg-n").value), s = Number($("sg-s").value);
  try {
    const pts = sigma_curve(n, s, 60);
    const exact = Number(closed_form_value(n, 17));
    plot($("sg-plot"), pts, { reference: exact });
    const last = pts[pts.length - 1];
    show("sg-out", `S = ${pts[pts.length - 2]}: ${last.toPrecision(8)}  (closed form ${exact.toPrecision(8)}, ` +
      `relative gap ${((exact - last) / exact).toExponential(2)})`);
  } catch (e) {
    show("sg-out", String(e), true);
  }
}

function gauss() {
  const x = Number($("ga-x").value), s = Number($("ga-s").value);
  try {
    const pts = gauss_curve(x, s, 60);
    plot($("ga-plot"), pts, { logY: true });
    show("ga-out", `S = ${pts[pts.length - 2]}: |lhs - rhs| = ${pts[pts.length - 1].toExponential(3)}`);
  } catch (e) {
    show("ga-out", String(e), true);
  }
}

await init();
$("cf-go").onclick = closedForm;
$("sg-go").onclick = sigma;
$("ga-go").onclick = gauss;
closedForm();
