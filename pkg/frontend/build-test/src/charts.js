// Chart rendering. Pure functions from analysis JSON to SVG strings:
// the console displays what the engine computed, nothing more, so the
// charts work offline against recorded fixtures.
import { cdToNumber } from "./types.js";
export const ALL_COLOR = "#0000FF";
export const PROFILE_COLOR = "#FE0000";
const PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
];
function esc(text) {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}
/** Log-scale bar geometry; zero counts are omitted, not drawn at a floor. */
export function countBars(analysis) {
    const shown = analysis.buckets.filter((b) => b.count_all > 0 || b.count_profile > 0);
    const maxCount = Math.max(1, ...shown.map((b) => Math.max(b.count_all, b.count_profile)));
    const logTop = Math.max(1, Math.ceil(Math.log10(maxCount)));
    const bars = [];
    for (const bucket of shown) {
        for (const [series, count] of [["all", bucket.count_all], ["profile", bucket.count_profile]]) {
            if (count <= 0)
                continue;
            const height = count > 1 ? Math.log10(count) / logTop : 0.01;
            bars.push({ k: bucket.k, cd: bucket.cd, series, count, height });
        }
    }
    return { bars, logTop };
}
export function renderCountChart(analysis, width = 460, height = 320) {
    const margin = { left: 52, right: 10, top: 10, bottom: 40 };
    const panelW = width - margin.left - margin.right;
    const panelH = height - margin.top - margin.bottom;
    const { bars, logTop } = countBars(analysis);
    const shownKs = [...new Set(bars.map((b) => b.k))].sort((a, b) => a - b);
    const slot = panelW / Math.max(1, shownKs.length);
    const barW = slot * 0.38;
    const parts = [];
    parts.push(`<svg xmlns="http://www.w3.org/2000/svg" class="count-chart" viewBox="0 0 ${width} ${height}" ` +
        `width="${width}" height="${height}" role="img" aria-label="scenario counts, log scale">`);
    for (let power = 0; power <= logTop; power++) {
        const y = margin.top + panelH * (1 - power / logTop);
        parts.push(`<line x1="${margin.left - 4}" y1="${y}" x2="${margin.left + panelW}" y2="${y}" stroke="#ddd"/>` +
            `<text x="${margin.left - 8}" y="${y + 4}" text-anchor="end" font-size="10">1e${power}</text>`);
    }
    for (const bar of bars) {
        const slotIndex = shownKs.indexOf(bar.k);
        const x = margin.left + slotIndex * slot + slot * 0.08 + (bar.series === "profile" ? barW : 0);
        const h = panelH * bar.height;
        const y = margin.top + panelH - h;
        const color = bar.series === "all" ? ALL_COLOR : PROFILE_COLOR;
        parts.push(`<rect class="bar bar-${bar.series}" data-k="${bar.k}" x="${x.toFixed(2)}" y="${y.toFixed(2)}" ` +
            `width="${barW.toFixed(2)}" height="${h.toFixed(2)}" fill="${color}">` +
            `<title>cd ${esc(bar.cd)}: ${bar.count}</title></rect>`);
    }
    for (const k of shownKs) {
        const x = margin.left + shownKs.indexOf(k) * slot + slot / 2;
        const cd = cdToNumber(analysis.buckets[k].cd);
        parts.push(`<text x="${x.toFixed(2)}" y="${margin.top + panelH + 16}" text-anchor="middle" font-size="10">` +
            `${cd.toFixed(2)}</text>`);
    }
    parts.push(`<text x="${margin.left + panelW / 2}" y="${height - 6}" text-anchor="middle" font-size="11">` +
        `consistent difficulty</text>`);
    parts.push("</svg>");
    return parts.join("");
}
export function renderVarianceChart(analysis, width = 460, height = 320) {
    const margin = { left: 40, right: 120, top: 10, bottom: 40 };
    const panelW = width - margin.left - margin.right;
    const panelH = height - margin.top - margin.bottom;
    const parts = [];
    parts.push(`<svg xmlns="http://www.w3.org/2000/svg" class="variance-chart" viewBox="0 0 ${width} ${height}" ` +
        `width="${width}" height="${height}" role="img" aria-label="feature variance by difficulty">`);
    parts.push(`<rect x="${margin.left}" y="${margin.top}" width="${panelW}" height="${panelH}" fill="none" stroke="#999"/>`);
    for (const tick of [0, 0.5, 1]) {
        const y = margin.top + panelH * (1 - tick);
        parts.push(`<text x="${margin.left - 6}" y="${y + 4}" text-anchor="end" font-size="10">${tick}</text>`);
    }
    analysis.curves.forEach((curve, i) => {
        const color = PALETTE[i % PALETTE.length];
        const points = curve.points
            .map((p) => {
            const x = margin.left + panelW * cdToNumber(p.cd);
            const y = margin.top + panelH * (1 - p.v);
            return `${x.toFixed(2)},${y.toFixed(2)}`;
        })
            .join(" ");
        parts.push(`<polyline points="${points}" fill="none" stroke="${color}" stroke-width="1.5">` +
            `<title>${esc(curve.feature_name)}</title></polyline>`);
        const ly = margin.top + 13 * i;
        parts.push(`<rect x="${margin.left + panelW + 8}" y="${ly}" width="9" height="9" fill="${color}"/>` +
            `<text x="${margin.left + panelW + 21}" y="${ly + 8}" font-size="9">${esc(curve.feature_name)}</text>`);
    });
    parts.push(`<text x="${margin.left + panelW / 2}" y="${height - 6}" text-anchor="middle" font-size="11">` +
        `feature variance V</text>`);
    parts.push("</svg>");
    return parts.join("");
}
