//! Output documents. Each carries a `schema` tag `toruskit/<command>/v1`.

use serde::{Deserialize, Serialize};
use toruskit::heights::{LocalValue, LogValue};
use toruskit::io::{DivisorJson, FanJson, JsonInt, PointJson, RationalJson};
use toruskit::sections::KodairaReport;

pub fn tag(command: &str) -> String {
    format!("toruskit/{command}/v1")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorDoc {
    pub schema: String,
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetDoc {
    pub normal: Vec<JsonInt>,
    pub bound: JsonInt,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceDoc {
    pub index: usize,
    pub dim: usize,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NewtonDoc {
    pub schema: String,
    pub rank: usize,
    pub dim: usize,
    pub vertices: Vec<Vec<JsonInt>>,
    pub facets: Vec<FacetDoc>,
    pub faces: Vec<FaceDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UenoDoc {
    pub schema: String,
    pub rank: usize,
    pub basis: Vec<Vec<JsonInt>>,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SaturateDoc {
    pub schema: String,
    pub multiple: u32,
    pub cap: u32,
    pub vertices: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitDoc {
    pub dim: usize,
    pub face: Vec<usize>,
    pub characters: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    pub schema: String,
    pub fan: FanJson,
    pub rays: Vec<Vec<JsonInt>>,
    pub complete: bool,
    pub smooth: bool,
    pub orbits: Vec<OrbitDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmpleDoc {
    pub schema: String,
    pub divisor: DivisorJson,
    pub origin: Vec<JsonInt>,
    pub cartier: bool,
    pub ample: bool,
    pub orbit_avoidance: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolveDoc {
    pub schema: String,
    pub source: FanJson,
    pub target: FanJson,
    pub inserted: Vec<Vec<JsonInt>>,
    pub smooth: bool,
    pub complete: bool,
    /// Absent when the target is not complete.
    pub log_canonical_trivial: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleDoc {
    pub m: u64,
    pub h0: JsonInt,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KodairaBody {
    /// `null` stands for minus infinity.
    pub kappa: Option<usize>,
    pub m0: Option<u64>,
    pub rank: usize,
    pub m_max: u64,
    pub big: bool,
    pub samples: Vec<SampleDoc>,
    pub growth_samples: Vec<SampleDoc>,
    pub growth_exponent: Option<f64>,
}

impl KodairaBody {
    pub fn from_report(r: &KodairaReport) -> Self {
        let samples = |v: &[(u64, num_bigint::BigInt)]| v.iter().map(|(m, h)| SampleDoc { m: *m, h0: JsonInt(h.clone()) }).collect();
        KodairaBody {
            kappa: r.kappa,
            m0: r.m0,
            rank: r.rank,
            m_max: r.m_max,
            big: r.big,
            samples: samples(&r.samples),
            growth_samples: samples(&r.growth_samples),
            growth_exponent: r.growth_exponent,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KappaDoc {
    pub schema: String,
    #[serde(flatten)]
    pub report: KodairaBody,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogKappaDoc {
    pub schema: String,
    pub kappa: usize,
    pub rank: usize,
    pub ueno_rank: usize,
    pub inserted_rays: usize,
    pub sections: KodairaBody,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectDoc {
    pub schema: String,
    pub face: FaceDoc,
    pub basis: Vec<Vec<JsonInt>>,
    pub target_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogTermDoc {
    pub base: JsonInt,
    pub coeff: RationalJson,
}

/// `Σ coeff · log base`, with a floating-point approximation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogValueDoc {
    pub terms: Vec<LogTermDoc>,
    pub approx: f64,
}

impl LogValueDoc {
    pub fn from_value(v: &LogValue) -> Self {
        let terms =
            v.terms().iter().map(|(b, q)| LogTermDoc { base: JsonInt(b.clone()), coeff: RationalJson::from_rational(q) }).collect();
        LogValueDoc { terms, approx: v.to_f64() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalValueDoc {
    pub place: String,
    pub value: LogValueDoc,
}

impl LocalValueDoc {
    pub fn from_local(l: &LocalValue) -> Self {
        LocalValueDoc { place: l.place.to_string(), value: LogValueDoc::from_value(&l.value) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeightDoc {
    pub schema: String,
    pub height: LogValueDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDoc {
    pub block: JsonInt,
    pub value: LogValueDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeilDoc {
    pub schema: String,
    pub value: LocalValueDoc,
    pub lower_bound: LogValueDoc,
    pub height: LogValueDoc,
    pub local: Vec<LocalValueDoc>,
    pub blocks: Vec<BlockDoc>,
    pub total: LogValueDoc,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistanceDoc {
    pub schema: String,
    pub place: String,
    pub sum: LogValueDoc,
    pub max: LogValueDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerateDoc {
    pub schema: String,
    pub bound: JsonInt,
    pub primes: Vec<u64>,
    pub points: Vec<PointJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub character: Option<Vec<JsonInt>>,
    pub constant: Option<RationalJson>,
    pub points: Vec<PointJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamiliesDoc {
    pub schema: String,
    pub families: Vec<FamilyDoc>,
}
