// The analysis view renders straight from recorded engine output: the
// header carries the profile's totals and the count chart is log-scaled.
import assert from "node:assert/strict";
import { test } from "node:test";
import { PROFILE_1_ANALYSIS } from "../src/fixtures/profile1Analysis.js";
import { renderAnalysisView } from "../src/views.js";
import { countBars, renderCountChart } from "../src/charts.js";
const analysis = JSON.parse(JSON.stringify(PROFILE_1_ANALYSIS));
test("header shows the profile totals from the fixture", () => {
    const html = renderAnalysisView(analysis);
    assert.ok(html.includes("87.5%"));
    assert.ok(html.includes("290304 / 331776"));
    assert.ok(html.includes("All scenarios"));
    assert.ok(html.includes("Profile specific scenarios"));
});
test("count chart is log-scaled with power-of-ten ticks", () => {
    const svg = renderCountChart(analysis);
    assert.ok(svg.includes(">1e0<"));
    assert.ok(svg.includes(">1e5<")); // max bucket holds ~1e5 scenarios
    assert.ok(svg.includes('fill="#0000FF"'));
    assert.ok(svg.includes('fill="#FE0000"'));
    // log geometry: a 10x count gap maps to an equal height step
    const { bars, logTop } = countBars(analysis);
    assert.equal(logTop, 6);
    for (const bar of bars) {
        assert.ok(Math.abs(bar.height - Math.log10(bar.count) / logTop) < 1e-12 || bar.count <= 1);
    }
});
test("zero-count buckets are omitted, not drawn at a floor", () => {
    const { bars } = countBars(analysis);
    // bucket 0 has count_all = 7 but count_profile = 0 under this filter
    const bucket0 = bars.filter((b) => b.k === 0);
    assert.deepEqual(bucket0.map((b) => b.series), ["all"]);
});
test("stale badge appears when the profile version moved on", () => {
    const fresh = renderAnalysisView(analysis, analysis.profile_version);
    assert.ok(!fresh.includes("stale"));
    const stale = renderAnalysisView(analysis, analysis.profile_version + 1);
    assert.ok(stale.includes("stale"));
});
test("bars carry bucket ids for the click-through to the browser", () => {
    const svg = renderCountChart(analysis);
    assert.ok(svg.includes('class="bar bar-profile" data-k="4"'));
});
