// Session composer state: difficulty targets, per-level count, the
// returned plan, and client-side step reordering before export.
export function emptyComposer() {
    return { targets: [], perLevel: 2, seed: 1, plan: null, order: [] };
}
const TARGET_PATTERN = /^(\d+(\.\d+)?|\d+\/\d+)$/;
export function isValidTarget(raw) {
    if (!TARGET_PATTERN.test(raw.trim()))
        return false;
    const text = raw.trim();
    const slash = text.indexOf("/");
    const value = slash >= 0
        ? Number(text.slice(0, slash)) / Number(text.slice(slash + 1))
        : Number(text);
    return Number.isFinite(value) && value >= 0 && value <= 1;
}
export function addTarget(state, raw) {
    if (!isValidTarget(raw))
        return state;
    return { ...state, targets: [...state.targets, raw.trim()] };
}
export function removeTarget(state, index) {
    return { ...state, targets: state.targets.filter((_, i) => i !== index) };
}
export function withPlan(state, plan) {
    return { ...state, plan, order: plan.steps.map((_, i) => i) };
}
export function moveStep(state, position, delta) {
    const target = position + delta;
    if (position < 0 || position >= state.order.length)
        return state;
    if (target < 0 || target >= state.order.length)
        return state;
    const order = [...state.order];
    [order[position], order[target]] = [order[target], order[position]];
    return { ...state, order };
}
export function orderedSteps(state) {
    if (!state.plan)
        return [];
    return state.order.map((i) => state.plan.steps[i]);
}
/** The exported document: the plan with steps in display order. */
export function exportPlan(state) {
    if (!state.plan)
        throw new Error("no plan to export");
    const doc = {
        profile: state.plan.profile,
        seed: state.plan.seed,
        steps: orderedSteps(state),
    };
    return JSON.stringify(doc, null, 2);
}
