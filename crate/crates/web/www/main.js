import init, {
  scenarioTable,
  scenarioLabels,
  complementarityCurve,
  multiplierCurve,
} from "./pkg/kisces_web.js";

const CHANNEL_COLOURS = ["#d1495b", "#00798c", "#edae49", "#66a182"];
const CHANNEL_NAMES = ["G^C", "G^I", "q", "B"];

function values(section) {
  const out = {};
  for (const input of section.querySelectorAll("input")) {
    out[input.name] = Number(input.value);
    input.nextElementSibling.textContent = input.value;
  }
  return out;
}

function bind(id, draw) {
  const section = document.getElementById(id);
  const canvas = section.querySelector("canvas");
  const error = section.querySelector(".error");
  const update = () => {
    error.textContent = "";
    const ctx = canvas.getContext("2d");
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    try {
      draw(ctx, canvas, values(section));
    } catch (e) {
      error.textContent = e.message ?? String(e);
    }
  };
  section.addEventListener("input", update);
  update();
}

function axes(ctx, w, h, pad, label) {
  ctx.strokeStyle = "#888";
  ctx.beginPath();
  ctx.moveTo(pad, pad / 2);
  ctx.lineTo(pad, h - pad);
  ctx.lineTo(w - pad / 2, h - pad);
  ctx.stroke();
  ctx.fillStyle = "#444";
  ctx.font = "12px system-ui";
  ctx.fillText(label, pad + 4, pad / 2 + 10);
}

function lines(ctx, canvas, xs, series, colours, names, xLabel) {
  const pad = 40;
  const w = canvas.width, h = canvas.height;
  const all = series.flat();
  const lo = Math.min(0, ...all), hi = Math.max(...all) * 1.05;
  const x0 = xs[0], x1 = xs[xs.length - 1];
  const px = (x) => pad + ((x - x0) / (x1 - x0)) * (w - 1.5 * pad);
  const py = (y) => h - pad - ((y - lo) / (hi - lo)) * (h - 1.5 * pad);
  axes(ctx, w, h, pad, `max ${hi.toFixed(3)}`);
  ctx.fillText(xLabel, w - pad * 2, h - pad / 3);
  series.forEach((ys, k) => {
    ctx.strokeStyle = colours[k];
    ctx.lineWidth = 2;
    ctx.beginPath();
    ys.forEach((y, i) => (i ? ctx.lineTo(px(xs[i]), py(y)) : ctx.moveTo(px(xs[i]), py(y))));
    ctx.stroke();
    ctx.fillStyle = colours[k];
    ctx.fillText(names[k], w - pad * 2, pad / 2 + 14 * (k + 1));
  });
  ctx.lineWidth = 1;
}

function columns(flat, width) {
  const out = Array.from({ length: width }, () => []);
  flat.forEach((v, i) => out[i % width].push(v));
  return out;
}

function drawScenarios(ctx, canvas, v) {
  const table = scenarioTable(v.m_gc, v.m_gi, v.eta, v.chi);
  const labels = scenarioLabels().split(",");
  const pad = 40, w = canvas.width, h = canvas.height;
  const rows = labels.map((_, i) => Array.from(table.slice(5 * i, 5 * i + 5)));
  let lo = 0, hi = 0;
  for (const r of rows) {
    const pos = r.slice(1).filter((x) => x > 0).reduce((a, b) => a + b, 0);
    const neg = r.slice(1).filter((x) => x < 0).reduce((a, b) => a + b, 0);
    hi = Math.max(hi, pos);
    lo = Math.min(lo, neg);
  }
  const span = hi - lo || 1;
  const py = (y) => pad / 2 + ((hi - y) / span) * (h - 1.5 * pad);
  const slot = (w - pad) / rows.length;
  axes(ctx, w, h, pad, "channel contributions; dot = Ŷ");
  ctx.strokeStyle = "#888";
  ctx.beginPath();
  ctx.moveTo(pad, py(0));
  ctx.lineTo(w, py(0));
  ctx.stroke();
  rows.forEach((r, i) => {
    const x = pad + i * slot + slot * 0.2;
    let up = 0, down = 0;
    r.slice(1).forEach((c, k) => {
      const base = c >= 0 ? up : down;
      ctx.fillStyle = CHANNEL_COLOURS[k];
      ctx.fillRect(x, py(Math.max(base, base + c)), slot * 0.6, Math.abs(py(base + c) - py(base)));
      if (c >= 0) up += c; else down += c;
    });
    ctx.fillStyle = "#000";
    ctx.beginPath();
    ctx.arc(x + slot * 0.3, py(r[0]), 4, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillText(labels[i], x + slot * 0.2, h - pad / 2);
    ctx.fillText(r[0].toFixed(4), x, py(r[0]) - 8);
  });
  CHANNEL_NAMES.forEach((n, k) => {
    ctx.fillStyle = CHANNEL_COLOURS[k];
    ctx.fillText(n, w - 60, pad / 2 + 14 * k);
  });
}

function drawComplementarity(ctx, canvas, v) {
  const [kp, mpk] = columns(Array.from(complementarityCurve(v.sigma, 3, 1, 2, 100)), 3);
  lines(ctx, canvas, kp, [mpk], ["#00798c"], ["MPK"], "K^P");
}

function drawMultipliers(ctx, canvas, v) {
  const [kappa, gc, gi] = columns(Array.from(multiplierCurve(v.mpc, v.mpi, v.mpk_p, 2, 101)), 3);
  lines(ctx, canvas, kappa, [gc, gi], ["#d1495b", "#00798c"], ["m_GC", "m_GI"], "κ");
}

await init();
bind("scenarios", drawScenarios);
bind("complementarity", drawComplementarity);
bind("multipliers", drawMultipliers);
