// Wire types for the engine's HTTP API. The console never computes
// difficulty or diversity itself; everything numeric arrives in these
// documents.

export interface GroupDoc {
  id: number;
  name: string;
}

export interface FeatureDoc {
  id: number;
  name: string;
  group: number;
  values: readonly string[]; // exact rationals as strings, e.g. "1/3"
  labels?: readonly string[];
}

export interface SchemaDoc {
  fingerprint: string;
  combination_count: number;
  features: readonly FeatureDoc[];
  groups: readonly GroupDoc[];
}

export type ConstraintDoc =
  | { op: "true" }
  | { op: "allow"; feature: number; values: number[] }
  | { op: "atLeastOne"; atoms: [number, number[]][] }
  | { op: "and"; args: ConstraintDoc[] }
  | { op: "or"; args: ConstraintDoc[] }
  | { op: "not"; arg: ConstraintDoc };

export interface ProfileDoc {
  id: string;
  name: string;
  weights: Record<string, number>;
  constraint: ConstraintDoc;
  description: string;
  version: number;
}

export interface BucketEntry {
  k: number;
  cd: string;
  count_all: number;
  count_profile: number;
}

export interface CurvePoint {
  cd: string;
  v: number;
}

export interface CurveDoc {
  feature_id: number;
  feature_name: string;
  points: readonly CurvePoint[];
}

export interface AnalysisDoc {
  profile_id: string;
  profile_version: number;
  space_fingerprint: string;
  total_all: number;
  total_profile: number;
  percentage: number;
  delta: string;
  k_max: number;
  buckets: readonly BucketEntry[];
  curves: readonly CurveDoc[];
  excluded_features: readonly number[];
  thresholds: { low_cd_collapse: string | null; high_cd_collapse: string | null };
}

export interface BucketPageItem {
  assignment: readonly number[];
  labels: Record<string, string>;
}

export interface BucketPage {
  k: number;
  k_max: number;
  cd: string;
  total: number;
  offset: number;
  limit: number;
  items: readonly BucketPageItem[];
}

export interface SessionStep {
  cd: string;
  requested_cd?: string;
  assignment: readonly number[];
  labels: Record<string, string>;
}

export interface SessionPlanDoc {
  profile: string;
  seed: number;
  steps: readonly SessionStep[];
}

export interface JobTicket {
  status: "in_progress" | "failed";
  job_id?: string;
  error?: string;
}

/** Parse "p/q" / "0" / "1" into a float for chart placement only. */
export function cdToNumber(cd: string): number {
  const slash = cd.indexOf("/");
  if (slash < 0) return Number(cd);
  return Number(cd.slice(0, slash)) / Number(cd.slice(slash + 1));
}
