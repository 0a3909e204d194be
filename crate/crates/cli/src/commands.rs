//! Request dispatch. Every command maps a JSON payload to a JSON value.

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};
use snakecheck::correspond::{
    column_to_segment, column_to_y, monomial_to_multisegment, multisegment_to_columns, multisegment_to_monomial,
    multisegment_to_tableau, segment_to_column, tableau_to_multisegment,
};
use snakecheck::criterion::{
    irreducible_extremal, irreducible_snake_pair, lc_k_matching, nc_k_witness, socle_with_cuspidal, Matching,
};
use snakecheck::qchar::{dominant_terms_of_product, fundamental_pair_status, fundamental_qchar, is_cyclic_pair};
use snakecheck::ring_calc::{ladder_decomposition_k_capped, tensor_oracle};
use snakecheck::tableaux::weakly_separated;
use snakecheck::{Column, DominantMonomial, Multisegment, Segment, Tableau};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Unsupported(_) => 3,
        }
    }
}

impl From<snakecheck::Error> for CliError {
    fn from(e: snakecheck::Error) -> Self {
        match e {
            snakecheck::Error::NotLadder | snakecheck::Error::OverBudget(_) => CliError::Unsupported(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Convert,
    Check,
    Socle,
    Decompose,
    Oracle,
    Qchar,
    Wsep,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Request {
    pub command: Command,
    #[serde(default)]
    pub payload: Value,
    pub k: Option<u32>,
    pub n: Option<u32>,
}

impl Request {
    pub fn new(command: Command, payload: Value) -> Self {
        Request {
            command,
            payload,
            k: None,
            n: None,
        }
    }
}

/// Values from the command line, used when neither payload nor request sets them.
#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub k: Option<u32>,
    pub n: Option<u32>,
    pub budget: usize,
}

struct Ctx<'a> {
    req: &'a Request,
    opts: &'a Options,
}

impl Ctx<'_> {
    fn payload<T: DeserializeOwned>(&self) -> Result<T> {
        serde_json::from_value(self.req.payload.clone())
            .map_err(|e| CliError::Invalid(format!("{:?} payload: {e}", self.req.command)))
    }

    fn k(&self, from_payload: Option<u32>) -> Result<u32> {
        let k = from_payload
            .or(self.req.k)
            .or(self.opts.k)
            .ok_or_else(|| CliError::Invalid("k is required".into()))?;
        if k < 2 {
            return Err(CliError::Invalid(format!("k must be at least 2, got {k}")));
        }
        Ok(k)
    }

    fn n(&self, from_payload: Option<u32>) -> Option<u32> {
        from_payload.or(self.req.n).or(self.opts.n)
    }
}

fn require_range(k: u32, n: u32) -> Result<()> {
    if n < k + 2 {
        return Err(CliError::Invalid(format!("n must be at least k+2, got k={k}, n={n}")));
    }
    Ok(())
}

pub fn run(req: &Request, opts: &Options) -> Result<Value> {
    let ctx = Ctx { req, opts };
    match req.command {
        Command::Convert => convert(&ctx),
        Command::Check => check(&ctx),
        Command::Socle => socle(&ctx),
        Command::Decompose => decompose(&ctx),
        Command::Oracle => oracle(&ctx),
        Command::Qchar => qchar(&ctx),
        Command::Wsep => wsep(&ctx),
    }
}

fn multiseg(v: &[Segment]) -> Multisegment {
    v.iter().copied().collect()
}

fn seg_list(m: &Multisegment) -> Value {
    json!(m.segments())
}

fn monomial_json(d: &DominantMonomial) -> Value {
    json!(d.triples())
}

fn require_mult_k(m: &Multisegment, k: u32) -> Result<()> {
    match m.iter().find(|s| s.len() >= i64::from(k)) {
        Some(s) => Err(CliError::Invalid(format!("segment {s} is not shorter than k={k}"))),
        None => Ok(()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConvertPayload {
    segment: Option<Segment>,
    multisegment: Option<Vec<Segment>>,
    monomial: Option<Vec<(i64, i64, u32)>>,
    column: Option<Vec<u32>>,
    tableau: Option<Vec<Vec<u32>>>,
    k: Option<u32>,
    n: Option<u32>,
}

fn convert(ctx: &Ctx<'_>) -> Result<Value> {
    let p: ConvertPayload = ctx.payload()?;
    let given = [
        p.segment.is_some(),
        p.multisegment.is_some(),
        p.monomial.is_some(),
        p.column.is_some(),
        p.tableau.is_some(),
    ];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(CliError::Invalid(
            "give exactly one of segment, multisegment, monomial, column, tableau".into(),
        ));
    }
    let n = ctx.n(p.n);
    if let Some(s) = p.segment {
        let mut out = json!({
            "segment": s,
            "monomial": monomial_json(&multisegment_to_monomial(&multiseg(&[s]))),
        });
        if let (Some(n), Ok(k)) = (n, ctx.k(p.k)) {
            require_range(k, n)?;
            out["column"] = json!(segment_to_column(&s, k, n)?.entries());
        }
        return Ok(out);
    }
    if let Some(v) = p.multisegment {
        let m = multiseg(&v);
        let mut out = json!({
            "multisegment": seg_list(&m.canonical()),
            "given_order": seg_list(&m),
            "monomial": monomial_json(&multisegment_to_monomial(&m)),
        });
        if let (Some(n), Ok(k)) = (n, ctx.k(p.k)) {
            require_range(k, n)?;
            let cols: Vec<Vec<u32>> = multisegment_to_columns(&m, k, n)?
                .iter()
                .map(|c| c.entries().to_vec())
                .collect();
            out["columns"] = json!(cols);
            out["tableau"] = json!(multisegment_to_tableau(&m, k, n)?.rows());
        }
        return Ok(out);
    }
    if let Some(triples) = p.monomial {
        let mut mono = DominantMonomial::one();
        for (i, s, e) in triples {
            mono.mul_var(snakecheck::YVariable::new(i, s)?, e);
        }
        let m = monomial_to_multisegment(&mono)?;
        return Ok(json!({"monomial": monomial_json(&mono), "multisegment": seg_list(&m)}));
    }
    let n = n.ok_or_else(|| CliError::Invalid("n is required for columns and tableaux".into()))?;
    if let Some(entries) = p.column {
        let k = u32::try_from(entries.len()).map_err(|_| CliError::Invalid("column too long".into()))?;
        require_range(k, n)?;
        let c = Column::new(k, n, entries)?;
        let s = column_to_segment(&c)?;
        let y = column_to_y(&c)?;
        return Ok(json!({"column": c.entries(), "segment": s, "monomial": [[y.node, y.shift, 1]]}));
    }
    let rows = p.tableau.unwrap_or_default();
    let k = u32::try_from(rows.len()).map_err(|_| CliError::Invalid("too many rows".into()))?;
    require_range(k, n)?;
    let t = Tableau::new(k, n, rows)?;
    let m = tableau_to_multisegment(&t)?;
    let cols: Vec<Vec<u32>> = t.small_gap_columns()?.iter().map(|c| c.entries().to_vec()).collect();
    Ok(json!({"tableau": t.rows(), "columns": cols, "multisegment": seg_list(&m)}))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairPayload {
    m: Vec<Segment>,
    n: Vec<Segment>,
    k: Option<u32>,
}

fn matching_json(m: &Matching) -> Value {
    json!(m
        .pairs
        .iter()
        .map(|(x, y)| [[x.0, x.1], [y.0, y.1]])
        .collect::<Vec<_>>())
}

// The matching when LC_k holds, otherwise the NC_k witness for ladders.
fn witness(m: &Multisegment, n: &Multisegment, k: u32, ladders: bool) -> Result<Value> {
    if let Some(f) = lc_k_matching(m, n, k) {
        return Ok(json!({"matching": matching_json(&f)}));
    }
    if ladders {
        if let Some((i, j, l)) = nc_k_witness(m, n, k)? {
            return Ok(json!({"nc": [i, j, l]}));
        }
    }
    Ok(Value::Null)
}

fn check(ctx: &Ctx<'_>) -> Result<Value> {
    let p: PairPayload = ctx.payload()?;
    let k = ctx.k(p.k)?;
    let (m, n) = (multiseg(&p.m), multiseg(&p.n));
    require_mult_k(&m, k)?;
    require_mult_k(&n, k)?;
    let ladders = m.is_ladder() && n.is_ladder();
    let forward = lc_k_matching(&m, &n, k).is_some();
    let backward = lc_k_matching(&n, &m, k).is_some();
    let extremal =
        |x: &Multisegment| x.len() == 1 && (x.segments()[0].len() == 1 || x.segments()[0].len() == i64::from(k) - 1);
    let (irreducible, basis) = if ladders {
        (irreducible_snake_pair(&m, &n, k)?, "snake")
    } else if extremal(&m) {
        (irreducible_extremal(&m.segments()[0], &n, k)?, "extremal")
    } else if extremal(&n) {
        (irreducible_extremal(&n.segments()[0], &m, k)?, "extremal")
    } else {
        (forward && backward, "conjectural")
    };
    Ok(json!({
        "k": k,
        "m": seg_list(&m.canonical()),
        "n": seg_list(&n.canonical()),
        "given_order": {"m": seg_list(&m), "n": seg_list(&n)},
        "irreducible": irreducible,
        "lc_forward": forward,
        "lc_backward": backward,
        "basis": basis,
        "witness": {
            "forward": witness(&m, &n, k, ladders)?,
            "backward": witness(&n, &m, k, ladders)?,
        },
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SoclePayload {
    a: i64,
    n: Vec<Segment>,
    k: Option<u32>,
}

fn socle(ctx: &Ctx<'_>) -> Result<Value> {
    let p: SoclePayload = ctx.payload()?;
    let k = ctx.k(p.k)?;
    let n = multiseg(&p.n);
    require_mult_k(&n, k)?;
    let s = socle_with_cuspidal(p.a, &n, k)?;
    Ok(json!({"k": k, "a": p.a, "socle": seg_list(&s.canonical()), "given_order": seg_list(&s)}))
}

fn decompose(ctx: &Ctx<'_>) -> Result<Value> {
    let p: PairPayload = ctx.payload()?;
    let (m, n) = (multiseg(&p.m), multiseg(&p.n));
    let k = p.k.or(ctx.req.k).or(ctx.opts.k);
    let cap = ctx.opts.budget;
    let terms = match k {
        Some(k) => {
            require_mult_k(&m, k)?;
            require_mult_k(&n, k)?;
            ladder_decomposition_k_capped(&m, &n, k, cap)?
        }
        None => snakecheck::ring_calc::ladder_decomposition_capped(&m, &n, cap)?,
    };
    let list: Vec<Value> = terms.iter().map(seg_list).collect();
    Ok(json!({
        "k": k,
        "terms": list,
        "count": terms.len(),
        "single_term": terms.len() == 1,
    }))
}

fn oracle(ctx: &Ctx<'_>) -> Result<Value> {
    let p: PairPayload = ctx.payload()?;
    let k = ctx.k(p.k)?;
    let (m, n) = (multiseg(&p.m), multiseg(&p.n));
    require_mult_k(&m, k)?;
    require_mult_k(&n, k)?;
    let size = m.len() + n.len();
    if size > ctx.opts.budget {
        return Err(CliError::Unsupported(format!(
            "{size} segments exceed the budget of {}",
            ctx.opts.budget
        )));
    }
    let r = tensor_oracle(&m, &n, k)?;
    let terms: Vec<Value> = r
        .decomposition
        .terms()
        .iter()
        .map(|(key, c)| json!({"multisegment": seg_list(key), "coefficient": c}))
        .collect();
    Ok(json!({"k": k, "irreducible": r.irreducible, "decomposition": terms}))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QcharPayload {
    i: i64,
    p: i64,
    j: Option<i64>,
    s: Option<i64>,
    k: Option<u32>,
}

fn qchar(ctx: &Ctx<'_>) -> Result<Value> {
    let q: QcharPayload = ctx.payload()?;
    let k = ctx.k(q.k)?;
    match (q.j, q.s) {
        (None, None) => {
            let c = fundamental_qchar(q.i, q.p, k)?;
            Ok(json!({"k": k, "i": q.i, "p": q.p, "terms": c}))
        }
        (Some(j), Some(s)) => {
            let status = fundamental_pair_status(q.i, q.p, j, s, k)?;
            let dominant: Vec<Value> = dominant_terms_of_product(q.i, q.p, j, s, k)?
                .iter()
                .map(monomial_json)
                .collect();
            Ok(json!({
                "k": k,
                "status": status,
                "dominant_terms": dominant,
                "cyclic": is_cyclic_pair(q.i, q.p, j, s, k)?,
            }))
        }
        _ => Err(CliError::Invalid("give both j and s, or neither".into())),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WsepPayload {
    a: Vec<u32>,
    b: Vec<u32>,
}

fn wsep(ctx: &Ctx<'_>) -> Result<Value> {
    let p: WsepPayload = ctx.payload()?;
    let norm = |v: &[u32]| {
        let mut v = v.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let (a, b) = (norm(&p.a), norm(&p.b));
    if a.len() != p.a.len() || b.len() != p.b.len() || a.len() != b.len() {
        return Err(CliError::Invalid("a and b must be sets of the same size".into()));
    }
    let ws = weakly_separated(&a, &b);
    let mut out = json!({"a": a, "b": b, "weakly_separated": ws});
    if ws {
        let a_only: Vec<u32> = a.iter().copied().filter(|x| !b.contains(x)).collect();
        let b_only: Vec<u32> = b.iter().copied().filter(|x| !a.contains(x)).collect();
        // the side whose differences sit between the other side's
        let inner_is_a = match (a_only.first(), b_only.first()) {
            (Some(&lo), Some(_)) => {
                let hi = *a_only.last().unwrap_or(&lo);
                b_only.iter().all(|&x| x < lo || x > hi)
            }
            _ => true,
        };
        let (inner, outer, name) = if inner_is_a {
            (&a_only, &b_only, "a")
        } else {
            (&b_only, &a_only, "b")
        };
        let lo = inner.first().copied().unwrap_or(0);
        let below: Vec<u32> = outer.iter().copied().filter(|&x| x < lo).collect();
        let above: Vec<u32> = outer.iter().copied().filter(|&x| x > lo).collect();
        out["partition"] = json!({"inner": name, "inner_elements": inner, "outer_below": below, "outer_above": above});
    }
    Ok(out)
}
