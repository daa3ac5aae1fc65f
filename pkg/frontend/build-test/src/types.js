// Wire types for the engine's HTTP API. The console never computes
// difficulty or diversity itself; everything numeric arrives in these
// documents.
/** Parse "p/q" / "0" / "1" into a float for chart placement only. */
export function cdToNumber(cd) {
    const slash = cd.indexOf("/");
    if (slash < 0)
        return Number(cd);
    return Number(cd.slice(0, slash)) / Number(cd.slice(slash + 1));
}
