// Client-side mirror of the server's document rules, so drafts fail
// fast in the UI instead of on PUT. Must stay in lockstep with the
// engine's validation; the test suite pins both sides to the same
// accept/reject corpus.
export const WEIGHT_MIN = 1;
export const WEIGHT_MAX = 5;
export function validateWeights(weights, schema) {
    const out = [];
    for (const group of schema.groups) {
        const w = weights[String(group.id)];
        if (w === undefined) {
            out.push({ code: "missing-weight", message: `no weight for group ${group.id} (${group.name})` });
        }
        else if (!Number.isInteger(w)) {
            out.push({ code: "weight-not-integer", message: `weight for group ${group.id} must be an integer` });
        }
        else if (w < WEIGHT_MIN || w > WEIGHT_MAX) {
            out.push({
                code: "weight-out-of-range",
                message: `weight ${w} for group ${group.id} outside ${WEIGHT_MIN}..${WEIGHT_MAX}`,
            });
        }
    }
    for (const key of Object.keys(weights)) {
        if (!schema.groups.some((g) => String(g.id) === key)) {
            out.push({ code: "unknown-group", message: `weight refers to missing group ${key}` });
        }
    }
    return out;
}
export function validateConstraint(doc, schema) {
    const out = [];
    const sizes = new Map(schema.features.map((f) => [f.id, f.values.length]));
    const checkRef = (feature, values) => {
        const size = sizes.get(feature);
        if (size === undefined) {
            out.push({ code: "dangling-feature", message: `constraint references missing feature ${feature}` });
            return;
        }
        for (const idx of values) {
            if (!Number.isInteger(idx) || idx < 0 || idx >= size) {
                out.push({
                    code: "value-index-out-of-range",
                    message: `feature ${feature}: index ${idx} outside 0..${size - 1}`,
                });
            }
        }
    };
    const walk = (node) => {
        switch (node.op) {
            case "true":
                return;
            case "allow":
                checkRef(node.feature, node.values);
                return;
            case "atLeastOne":
                if (node.atoms.length === 0) {
                    out.push({ code: "empty-atoms", message: "atLeastOne needs at least one atom" });
                }
                for (const [feature, values] of node.atoms)
                    checkRef(feature, values);
                return;
            case "and":
            case "or":
                if (node.args.length === 0) {
                    out.push({ code: "empty-args", message: `${node.op} needs at least one argument` });
                }
                node.args.forEach(walk);
                return;
            case "not":
                walk(node.arg);
                return;
            default:
                out.push({ code: "unknown-node", message: `unrecognized op ${node.op}` });
        }
    };
    walk(doc);
    return out;
}
export function validateProfileDoc(doc, schema) {
    const out = [];
    if (!doc.id.trim())
        out.push({ code: "empty-id", message: "profile id must not be empty" });
    if (!doc.name.trim())
        out.push({ code: "empty-name", message: "profile name must not be empty" });
    out.push(...validateWeights(doc.weights, schema));
    out.push(...validateConstraint(doc.constraint, schema));
    return out;
}
