//! Batch front end: one command, some JSON inputs, one JSON document out.

pub mod schema;

use std::collections::BTreeMap;
use std::io::Read;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;
use toruskit::cones::smallest_good_multiple;
use toruskit::heights::{
    boundary_distance, boundary_distance_max, detect_coset_families, enumerate_integral_points_with_cap, height,
    height_decomposition_check, weil_function, weil_lower_bound, Place, PlaceSet, RationalTorusPoint,
};
use toruskit::io::{
    parse, vector_json, DivisorJson, FanJson, JsonInt, PointJson, PointListJson, PolynomialJson, PolytopeJson, RationalJson,
};
use toruskit::newton::{newton_polytope, LatticePolytope, LaurentPolynomial};
use toruskit::resolve::{log_canonical_boundary, resolve_to_smooth_with_cap};
use toruskit::sections::{d_dimension_with, log_kodaira_dimension_with};
use toruskit::toricfan::{
    closure_avoids_orbits, completion_fan, divisor_closure, equivariant_projection, orbit_table, Fan,
};
use toruskit::{Caps, Error};

use schema::*;

pub const CAPS_ENV: &str = "TORUSKIT_CAPS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Command {
    Newton,
    Ueno,
    Saturate,
    Fan,
    Ample,
    Resolve,
    Kappa,
    Logkappa,
    Project,
    Height,
    Weil,
    Distance,
    Enumerate,
    Families,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Newton => "newton",
            Command::Ueno => "ueno",
            Command::Saturate => "saturate",
            Command::Fan => "fan",
            Command::Ample => "ample",
            Command::Resolve => "resolve",
            Command::Kappa => "kappa",
            Command::Logkappa => "logkappa",
            Command::Project => "project",
            Command::Height => "height",
            Command::Weil => "weil",
            Command::Distance => "distance",
            Command::Enumerate => "enumerate",
            Command::Families => "families",
        }
    }

    /// Options other than caps that the command accepts.
    pub fn options(self) -> &'static [&'static str] {
        match self {
            Command::Project => &["face"],
            Command::Weil | Command::Distance => &["place"],
            Command::Enumerate => &["primes", "bound"],
            _ => &[],
        }
    }

    /// Accepted number of `--in` documents.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Command::Height | Command::Weil => (2, 2),
            Command::Ample => (1, 2),
            _ => (1, 1),
        }
    }
}

/// One invocation. Inputs are `-` for stdin, inline JSON (starting with `{`), or a file path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub inputs: Vec<String>,
    pub output: Option<String>,
    pub options: BTreeMap<String, String>,
    /// Value of `TORUSKIT_CAPS`, applied before `options`.
    pub caps_env: Option<String>,
}

impl JobSpec {
    pub fn new(command: Command, inputs: Vec<String>) -> Self {
        JobSpec { command, inputs, output: None, options: BTreeMap::new(), caps_env: None }
    }

    pub fn with_option(mut self, key: &str, value: &str) -> Self {
        self.options.insert(key.to_string(), value.to_string());
        self
    }

    /// Parses `key=value` items. A repeated key is an error.
    pub fn parse_options(items: &[String]) -> Result<BTreeMap<String, String>, Error> {
        let mut out = BTreeMap::new();
        for item in items {
            let (k, v) = item.split_once('=').ok_or_else(|| Error::InvalidOption(format!("expected key=value, got {item:?}")))?;
            let k = k.trim();
            if k.is_empty() {
                return Err(Error::InvalidOption(format!("empty key in {item:?}")));
            }
            if out.insert(k.to_string(), v.trim().to_string()).is_some() {
                return Err(Error::InvalidOption(format!("option {k:?} given twice")));
            }
        }
        Ok(out)
    }
}

struct Job<'a> {
    texts: Vec<String>,
    options: &'a BTreeMap<String, String>,
    caps: Caps,
}

impl Job<'_> {
    fn option(&self, key: &str) -> Option<&str> {
        self.options.get(key).map(String::as_str)
    }
}

/// Runs a job and returns the serialized output document, newline-terminated.
pub fn run(job: &JobSpec) -> Result<String, Error> {
    let mut caps = Caps::default();
    if let Some(env) = &job.caps_env {
        caps.apply_overrides(env)?;
    }
    for (k, v) in &job.options {
        if !caps.set(k, v)? && !job.command.options().contains(&k.as_str()) {
            return Err(Error::InvalidOption(format!("{:?} is not an option of {}", k, job.command.name())));
        }
    }
    let (lo, hi) = job.command.arity();
    if job.inputs.len() < lo || job.inputs.len() > hi {
        let want = if lo == hi { lo.to_string() } else { format!("{lo} to {hi}") };
        return Err(Error::InvalidOption(format!("{} takes {want} inputs, got {}", job.command.name(), job.inputs.len())));
    }
    let texts = job.inputs.iter().map(|s| load_input(s)).collect::<Result<Vec<_>, _>>()?;
    let j = Job { texts, options: &job.options, caps };
    match job.command {
        Command::Newton => render(&newton(&j)?),
        Command::Ueno => render(&ueno(&j)?),
        Command::Saturate => render(&saturate(&j)?),
        Command::Fan => render(&fan(&j)?),
        Command::Ample => render(&ample(&j)?),
        Command::Resolve => render(&resolve(&j)?),
        Command::Kappa => render(&kappa(&j)?),
        Command::Logkappa => render(&logkappa(&j)?),
        Command::Project => render(&project(&j)?),
        Command::Height => render(&height_doc(&j)?),
        Command::Weil => render(&weil(&j)?),
        Command::Distance => render(&distance(&j)?),
        Command::Enumerate => render(&enumerate(&j)?),
        Command::Families => render(&families(&j)?),
    }
}

/// Error document for a failed job.
pub fn error_document(e: &Error) -> String {
    let doc = ErrorDoc { schema: tag("error"), code: e.code().to_string(), message: e.to_string() };
    render(&doc).expect("error documents serialize")
}

fn render<T: Serialize>(doc: &T) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(doc).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn load_input(spec: &str) -> Result<String, Error> {
    if spec == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        return Ok(s);
    }
    if spec.trim_start().starts_with('{') {
        return Ok(spec.to_string());
    }
    std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))
}

enum Shape {
    Polynomial(LaurentPolynomial),
    Polytope(LatticePolytope),
    Fan(Fan),
}

/// Reads a polynomial, polytope or fan document; the three schemas have disjoint keys.
fn shape(text: &str) -> Result<Shape, Error> {
    if let Ok(p) = parse::<PolynomialJson>(text) {
        return Ok(Shape::Polynomial(p.to_polynomial()?));
    }
    if let Ok(p) = parse::<PolytopeJson>(text) {
        return Ok(Shape::Polytope(p.to_polytope()?));
    }
    if let Ok(f) = parse::<FanJson>(text) {
        return Ok(Shape::Fan(f.to_fan()?));
    }
    let err = parse::<PolynomialJson>(text).err().expect("parse failed above");
    Err(Error::Parse(format!("expected a polynomial, polytope or fan document: {err}")))
}

fn polytope_of(text: &str) -> Result<LatticePolytope, Error> {
    match shape(text)? {
        Shape::Polynomial(f) => Ok(newton_polytope(&f)),
        Shape::Polytope(p) => Ok(p),
        Shape::Fan(_) => Err(Error::Parse("expected a polynomial or polytope document, got a fan".into())),
    }
}

fn polynomial(text: &str) -> Result<LaurentPolynomial, Error> {
    parse::<PolynomialJson>(text)?.to_polynomial()
}

fn point(text: &str) -> Result<RationalTorusPoint, Error> {
    parse::<PointJson>(text)?.to_point()
}

fn place(job: &Job) -> Result<Place, Error> {
    match job.option("place") {
        None | Some("inf") => Ok(Place::Infinite),
        Some(p) => {
            let p = p.parse::<u64>().map_err(|_| Error::InvalidOption(format!("place must be inf or a prime, got {p:?}")))?;
            Ok(Place::prime(p)?)
        }
    }
}

fn vectors(vs: &[toruskit::lattice::LatticeVector]) -> Vec<Vec<JsonInt>> {
    vs.iter().map(vector_json).collect()
}

fn newton(job: &Job) -> Result<NewtonDoc, Error> {
    let p = polytope_of(&job.texts[0])?;
    let facets = p
        .facets()
        .iter()
        .map(|f| FacetDoc { normal: vector_json(&f.functional), bound: JsonInt(f.bound.clone()), vertices: f.vertices.clone() })
        .collect();
    let faces = p.faces()
        .into_iter()
        .enumerate()
        .map(|(index, f)| FaceDoc { index, dim: f.dim, vertices: f.vertices })
        .collect();
    Ok(NewtonDoc { schema: tag("newton"), rank: p.rank(), dim: p.dim(), vertices: vectors(p.vertices()), facets, faces })
}

fn ueno(job: &Job) -> Result<UenoDoc, Error> {
    let f = polynomial(&job.texts[0])?;
    let basis = f.ueno_stabilizer();
    Ok(UenoDoc { schema: tag("ueno"), rank: basis.len(), trivial: basis.is_empty(), basis: vectors(&basis) })
}

fn saturate(job: &Job) -> Result<SaturateDoc, Error> {
    let p = polytope_of(&job.texts[0])?;
    let multiple = smallest_good_multiple(&p, job.caps.saturation)?;
    Ok(SaturateDoc { schema: tag("saturate"), multiple, cap: job.caps.saturation, vertices: vectors(p.vertices()) })
}

fn fan(job: &Job) -> Result<FanDoc, Error> {
    let p = polytope_of(&job.texts[0])?;
    let fan = completion_fan(&p)?;
    let orbits = orbit_table(&p)
        .into_iter()
        .map(|o| OrbitDoc { dim: o.dim, face: o.face.vertices, characters: vectors(&o.character_basis) })
        .collect();
    Ok(FanDoc {
        schema: tag("fan"),
        fan: FanJson::from_fan(&fan),
        rays: vectors(fan.rays()),
        complete: fan.is_complete(),
        smooth: fan.is_smooth(),
        orbits,
    })
}

fn ample(job: &Job) -> Result<AmpleDoc, Error> {
    let f = polynomial(&job.texts[0])?;
    let fan = match job.texts.get(1) {
        Some(t) => parse::<FanJson>(t)?.to_fan()?,
        None => completion_fan(&newton_polytope(&f))?,
    };
    let closure = divisor_closure(&f, &fan)?;
    let d = &closure.divisor;
    let cartier = d.is_cartier();
    let ample = cartier && d.is_ample()?;
    let avoids = closure_avoids_orbits(&f, d, &closure.origin)?;
    Ok(AmpleDoc {
        schema: tag("ample"),
        divisor: DivisorJson::from_divisor(d),
        origin: vector_json(&closure.origin),
        cartier,
        ample,
        orbit_avoidance: avoids,
    })
}

fn resolve(job: &Job) -> Result<ResolveDoc, Error> {
    let fan = match shape(&job.texts[0])? {
        Shape::Fan(f) => f,
        Shape::Polynomial(f) => completion_fan(&newton_polytope(&f))?,
        Shape::Polytope(p) => completion_fan(&p)?,
    };
    let sub = resolve_to_smooth_with_cap(&fan, job.caps.resolution)?;
    let complete = sub.target.is_complete();
    let log_canonical_trivial = if complete { Some(log_canonical_boundary(&sub.target)?.is_trivial()) } else { None };
    Ok(ResolveDoc {
        schema: tag("resolve"),
        source: FanJson::from_fan(&sub.source),
        target: FanJson::from_fan(&sub.target),
        inserted: vectors(&sub.inserted),
        smooth: sub.target.is_smooth(),
        complete,
        log_canonical_trivial,
    })
}

fn kappa(job: &Job) -> Result<KappaDoc, Error> {
    let d = parse::<DivisorJson>(&job.texts[0])?.to_divisor()?;
    let r = d_dimension_with(&d, job.caps.m_max)?;
    Ok(KappaDoc { schema: tag("kappa"), report: KodairaBody::from_report(&r) })
}

fn logkappa(job: &Job) -> Result<LogKappaDoc, Error> {
    let f = polynomial(&job.texts[0])?;
    let r = log_kodaira_dimension_with(&f, job.caps.m_max, job.caps.resolution)?;
    Ok(LogKappaDoc {
        schema: tag("logkappa"),
        kappa: r.kappa,
        rank: r.rank,
        ueno_rank: r.ueno_rank,
        inserted_rays: r.inserted_rays,
        sections: KodairaBody::from_report(&r.sections),
    })
}

fn project(job: &Job) -> Result<ProjectDoc, Error> {
    let p = polytope_of(&job.texts[0])?;
    let faces = p.faces();
    let raw = job.option("face").ok_or_else(|| Error::InvalidOption("project needs face=<index>".into()))?;
    let index = raw
        .parse::<usize>()
        .ok()
        .filter(|i| *i < faces.len())
        .ok_or_else(|| Error::InvalidOption(format!("face must be an index below {}, got {raw:?}", faces.len())))?;
    let face = &faces[index];
    let proj = equivariant_projection(&p, face);
    Ok(ProjectDoc {
        schema: tag("project"),
        face: FaceDoc { index, dim: face.dim, vertices: face.vertices.clone() },
        target_rank: proj.basis.len(),
        basis: vectors(&proj.basis),
    })
}

fn height_doc(job: &Job) -> Result<HeightDoc, Error> {
    let pt = point(&job.texts[0])?;
    let p = polytope_of(&job.texts[1])?;
    Ok(HeightDoc { schema: tag("height"), height: LogValueDoc::from_value(&height(&pt, &p)?) })
}

fn weil(job: &Job) -> Result<WeilDoc, Error> {
    let f = polynomial(&job.texts[0])?;
    let pt = point(&job.texts[1])?;
    let v = place(job)?;
    let value = weil_function(&f, &pt, &v)?;
    let lower = weil_lower_bound(&f, &v)?;
    let report = height_decomposition_check(&f, &pt)?;
    Ok(WeilDoc {
        schema: tag("weil"),
        value: LocalValueDoc::from_local(&value),
        lower_bound: LogValueDoc::from_value(&lower),
        height: LogValueDoc::from_value(&report.height),
        local: report.local.iter().map(LocalValueDoc::from_local).collect(),
        blocks: report
            .blocks
            .iter()
            .map(|(b, v)| BlockDoc { block: JsonInt(b.clone()), value: LogValueDoc::from_value(v) })
            .collect(),
        total: LogValueDoc::from_value(&report.total),
        equal: report.equal,
    })
}

fn distance(job: &Job) -> Result<DistanceDoc, Error> {
    let pt = point(&job.texts[0])?;
    let v = place(job)?;
    let sum = boundary_distance(&pt, &v)?;
    let max = boundary_distance_max(&pt, &v)?;
    Ok(DistanceDoc {
        schema: tag("distance"),
        place: v.to_string(),
        sum: LogValueDoc::from_value(&sum.value),
        max: LogValueDoc::from_value(&max.value),
    })
}

fn enumerate(job: &Job) -> Result<EnumerateDoc, Error> {
    let f = polynomial(&job.texts[0])?;
    let primes = match job.option("primes") {
        None | Some("") => Vec::new(),
        Some(list) => list
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::InvalidOption(format!("bad prime {p:?}"))))
            .collect::<Result<Vec<_>, _>>()?,
    };
    let s = PlaceSet::new(&primes)?;
    let raw = job.option("bound").ok_or_else(|| Error::InvalidOption("enumerate needs bound=<B>".into()))?;
    let bound = raw
        .parse::<BigInt>()
        .ok()
        .filter(|b| b.is_positive() && raw.len() <= 4096)
        .ok_or_else(|| Error::InvalidOption(format!("bound must be a positive integer, got {raw:?}")))?;
    let points = enumerate_integral_points_with_cap(&f, &s, &bound, job.caps.exponent)?;
    Ok(EnumerateDoc {
        schema: tag("enumerate"),
        bound: JsonInt(bound),
        primes: s.primes().to_vec(),
        points: points.iter().map(PointJson::from_point).collect(),
    })
}

/// Point list, or the output of `enumerate`.
fn families(job: &Job) -> Result<FamiliesDoc, Error> {
    let text = &job.texts[0];
    let points = match parse::<PointListJson>(text) {
        Ok(list) => list.to_points()?,
        Err(first) => match parse::<EnumerateDoc>(text) {
            Ok(doc) => doc.points.iter().map(PointJson::to_point).collect::<Result<Vec<_>, _>>()?,
            Err(_) => return Err(first),
        },
    };
    let families = detect_coset_families(&points)?
        .into_iter()
        .map(|fam| FamilyDoc {
            character: fam.character.as_ref().map(vector_json),
            constant: fam.constant.as_ref().map(RationalJson::from_rational),
            points: fam.points.iter().map(PointJson::from_point).collect(),
        })
        .collect();
    Ok(FamiliesDoc { schema: tag("families"), families })
}
