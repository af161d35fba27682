//! JSON and CSV encodings. All integers are written exactly; JSON numbers use
//! arbitrary precision so large coefficients survive a round trip.

use std::fmt::Write as _;

use nchilb_core::steinberg::SmallnessReport;
use nchilb_core::trees::CensusRow;
use nchilb_core::{
    LaurentPolynomial, MotiveEntry, MotiveKind, MotiveTable, Poly, RationalFunction, Route, Tree,
    TwistedSeries, Word,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::CliError;

pub const TABLE_CSV_HEADER: &str = "m,d,kind,route,dimension,min_exp,coeffs";
pub const CENSUS_CSV_HEADER: &str = "m,d,tree_id,dim_full,dim_punctual,n_linear_extensions";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn number(n: &BigInt) -> Number {
    n.to_string().parse().expect("integer literal is valid JSON")
}

fn big(n: &Number) -> Result<BigInt, CliError> {
    n.to_string()
        .parse()
        .map_err(|_| CliError::Parse(format!("not an integer: {n}")))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub min_exp: i64,
    pub coeffs: Vec<Number>,
}

impl From<&LaurentPolynomial> for PolyJson {
    fn from(p: &LaurentPolynomial) -> Self {
        let (min_exp, coeffs) = p.to_dense();
        Self {
            var: "q".into(),
            min_exp,
            coeffs: coeffs.iter().map(number).collect(),
        }
    }
}

impl TryFrom<&PolyJson> for LaurentPolynomial {
    type Error = CliError;
    fn try_from(p: &PolyJson) -> Result<Self, CliError> {
        if p.var != "q" {
            return Err(CliError::Parse(format!("unknown variable {:?}", p.var)));
        }
        let coeffs = p.coeffs.iter().map(big).collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPolynomial::from_coeffs(p.min_exp, coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

impl From<&RationalFunction> for RationalJson {
    fn from(r: &RationalFunction) -> Self {
        let poly = |p: &Poly| PolyJson::from(&LaurentPolynomial::from(p));
        Self {
            num: poly(r.numerator()),
            den: poly(r.denominator()),
        }
    }
}

impl TryFrom<&RationalJson> for RationalFunction {
    type Error = CliError;
    fn try_from(r: &RationalJson) -> Result<Self, CliError> {
        let num = LaurentPolynomial::try_from(&r.num)?;
        let den = LaurentPolynomial::try_from(&r.den)?;
        RationalFunction::from(&num)
            .checked_div(&RationalFunction::from(&den))
            .map_err(CliError::Core)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub twist: u32,
    pub order: usize,
    pub coeffs: Vec<PolyJson>,
}

impl From<&TwistedSeries<LaurentPolynomial>> for SeriesJson {
    fn from(s: &TwistedSeries<LaurentPolynomial>) -> Self {
        Self {
            twist: s.twist(),
            order: s.order(),
            coeffs: s.coeffs().iter().map(PolyJson::from).collect(),
        }
    }
}

impl TryFrom<&SeriesJson> for TwistedSeries<LaurentPolynomial> {
    type Error = CliError;
    fn try_from(s: &SeriesJson) -> Result<Self, CliError> {
        if s.coeffs.len() != s.order + 1 {
            return Err(CliError::Parse(format!(
                "series of order {} needs {} coefficients, got {}",
                s.order,
                s.order + 1,
                s.coeffs.len()
            )));
        }
        let coeffs = s
            .coeffs
            .iter()
            .map(LaurentPolynomial::try_from)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TwistedSeries::new(s.twist, coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct EntryJson {
    m: u32,
    d: usize,
    kind: String,
    route: String,
    dimension: i64,
    min_exp: i64,
    coeffs: Vec<Number>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct TableJson {
    entries: Vec<EntryJson>,
}

fn parse_kind(s: &str) -> Result<MotiveKind, CliError> {
    MotiveKind::parse(s).ok_or_else(|| CliError::Parse(format!("unknown kind {s:?}")))
}

fn parse_route(s: &str) -> Result<Route, CliError> {
    Route::parse(s).ok_or_else(|| CliError::Parse(format!("unknown route {s:?}")))
}

pub fn table_to_json(table: &MotiveTable) -> String {
    let entries = table
        .entries()
        .iter()
        .map(|e| {
            let p = PolyJson::from(&e.polynomial);
            EntryJson {
                m: e.m,
                d: e.d,
                kind: e.kind.as_str().into(),
                route: e.route.as_str().into(),
                dimension: e.dimension,
                min_exp: p.min_exp,
                coeffs: p.coeffs,
            }
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&TableJson { entries }).expect("serializable");
    s.push('\n');
    s
}

pub fn table_from_json(s: &str) -> Result<MotiveTable, CliError> {
    let t: TableJson = serde_json::from_str(s).map_err(|e| CliError::Parse(e.to_string()))?;
    let entries = t
        .entries
        .into_iter()
        .map(|e| {
            let coeffs = e.coeffs.iter().map(big).collect::<Result<Vec<_>, _>>()?;
            Ok(MotiveEntry {
                m: e.m,
                d: e.d,
                kind: parse_kind(&e.kind)?,
                route: parse_route(&e.route)?,
                polynomial: LaurentPolynomial::from_coeffs(e.min_exp, coeffs),
                dimension: e.dimension,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(MotiveTable::from_entries(entries))
}

pub fn table_to_csv(table: &MotiveTable) -> String {
    let mut s = String::from(TABLE_CSV_HEADER);
    s.push('\n');
    for e in table.entries() {
        let (min_exp, coeffs) = e.polynomial.to_dense();
        let coeffs: Vec<String> = coeffs.iter().map(BigInt::to_string).collect();
        writeln!(
            s,
            "{},{},{},{},{},{},{}",
            e.m,
            e.d,
            e.kind,
            e.route,
            e.dimension,
            min_exp,
            coeffs.join(";")
        )
        .expect("writing to a String");
    }
    s
}

pub fn table_from_csv(s: &str) -> Result<MotiveTable, CliError> {
    let mut lines = s.lines();
    if lines.next() != Some(TABLE_CSV_HEADER) {
        return Err(CliError::Parse("missing table header".into()));
    }
    let field = |f: &str| -> Result<i64, CliError> {
        f.parse().map_err(|_| CliError::Parse(format!("bad integer field {f:?}")))
    };
    let mut table = MotiveTable::new();
    for line in lines.filter(|l| !l.is_empty()) {
        let f: Vec<&str> = line.split(',').collect();
        let [m, d, kind, route, dim, min_exp, coeffs] = f[..] else {
            return Err(CliError::Parse(format!("expected 7 fields in {line:?}")));
        };
        let coeffs = coeffs
            .split(';')
            .filter(|c| !c.is_empty())
            .map(|c| c.parse::<BigInt>().map_err(|_| CliError::Parse(format!("bad coefficient {c:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        table.push(MotiveEntry {
            m: field(m)? as u32,
            d: field(d)? as usize,
            kind: parse_kind(kind)?,
            route: parse_route(route)?,
            dimension: field(dim)?,
            polynomial: LaurentPolynomial::from_coeffs(field(min_exp)?, coeffs),
        });
    }
    Ok(table)
}

pub fn table_to_text(table: &MotiveTable) -> String {
    let mut s = String::new();
    for e in table.entries() {
        writeln!(
            s,
            "m={} d={} {}/{} dim={}: {}",
            e.m, e.d, e.kind, e.route, e.dimension, e.polynomial
        )
        .expect("writing to a String");
    }
    s
}

pub fn emit_table(table: &MotiveTable, format: Format) -> String {
    match format {
        Format::Text => table_to_text(table),
        Format::Json => table_to_json(table),
        Format::Csv => table_to_csv(table),
    }
}

fn word_letters(w: &Word) -> Vec<u32> {
    w.letters().to_vec()
}

/// A tree as its list of words, each a list of letters.
pub fn tree_to_json_value(t: &Tree) -> serde_json::Value {
    serde_json::json!(t.words().iter().map(word_letters).collect::<Vec<_>>())
}

pub fn tree_from_json(arity: u32, s: &str) -> Result<Tree, CliError> {
    let words: Vec<Vec<u32>> = serde_json::from_str(s).map_err(|e| CliError::Parse(e.to_string()))?;
    Tree::new(arity, words.into_iter().map(Word::from_letters)).map_err(CliError::Core)
}

pub fn trees_to_text(trees: &[Tree]) -> String {
    trees.iter().map(|t| format!("{t}\n")).collect()
}

pub fn trees_to_json(m: u32, d: usize, trees: &[Tree]) -> String {
    let v = serde_json::json!({
        "m": m,
        "d": d,
        "trees": trees.iter().map(tree_to_json_value).collect::<Vec<_>>(),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

pub fn census_to_csv(m: u32, d: usize, rows: &[CensusRow]) -> String {
    let mut s = String::from(CENSUS_CSV_HEADER);
    s.push('\n');
    for r in rows {
        writeln!(
            s,
            "{m},{d},{},{},{},{}",
            r.tree_id, r.dim_full, r.dim_punctual, r.linear_extensions
        )
        .expect("writing to a String");
    }
    s
}

pub fn census_to_json(m: u32, d: usize, rows: &[CensusRow]) -> String {
    let rows: Vec<_> = rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "tree_id": r.tree_id,
                "tree": tree_to_json_value(&r.tree),
                "dim_full": r.dim_full,
                "dim_punctual": r.dim_punctual,
                "n_linear_extensions": number(&r.linear_extensions.clone().into()),
            })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&serde_json::json!({ "m": m, "d": d, "rows": rows }))
        .expect("serializable");
    s.push('\n');
    s
}

pub fn census_to_text(rows: &[CensusRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "#{} {} dim_full={} dim_punctual={} linear_extensions={}\n",
                r.tree_id, r.tree, r.dim_full, r.dim_punctual, r.linear_extensions
            )
        })
        .collect()
}

pub fn audit_to_json(r: &SmallnessReport) -> String {
    let strata: Vec<_> = r
        .strata
        .iter()
        .map(|s| {
            serde_json::json!({
                "length": s.length,
                "count": number(&s.count.clone().into()),
                "quotient_dim": s.quotient_dim,
            })
        })
        .collect();
    let v = serde_json::json!({
        "m": r.m,
        "d": r.d,
        "strata": strata,
        "top_dim": r.top_dim,
        "expected_dim": r.expected_dim,
        "unique_top": r.unique_top,
        "small": r.small,
        "printed_dim": r.printed_dim,
        "printed_dim_discrepancy": r.printed_dim_discrepancy,
        "note": r.note,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

pub fn audit_to_text(r: &SmallnessReport) -> String {
    let mut s = format!("smallness audit m={} d={}\n", r.m, r.d);
    for st in &r.strata {
        writeln!(
            s,
            "  l(σ)={:<3} permutations={:<8} quotient_dim={}",
            st.length, st.count, st.quotient_dim
        )
        .expect("writing to a String");
    }
    writeln!(s, "top_dim={} expected_dim={}", r.top_dim, r.expected_dim).expect("writing to a String");
    writeln!(s, "unique_top={} small={}", r.unique_top, r.small).expect("writing to a String");
    if r.printed_dim_discrepancy {
        writeln!(
            s,
            "printed dimension m(m-1)/2 = {} disagrees with the stratum formula ({})",
            r.printed_dim, r.top_dim
        )
        .expect("writing to a String");
    }
    if let Some(note) = &r.note {
        writeln!(s, "note: {note}").expect("writing to a String");
    }
    s
}
