//! Text formats for rings, ideals, matrices, modules, maps, and
//! complexes, plus canonical printers for each.
//!
//! All formats are line-oriented. `#` starts a full-line comment; blank
//! lines are ignored. Objects that stand alone (modules, complexes,
//! maps) start with a header naming them and referencing the files they
//! depend on, resolved relative to their own location, so a single path
//! is enough to load them. Headerless files (ideals, generator lists)
//! borrow the ring from the command line or from a sibling object.
//!
//! Printing is canonical: parse(render(x)) == x, and rendering what was
//! parsed reproduces the bytes. That is what lets reduced Groebner bases
//! and whole reports be compared as text.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::fpmod::{FPModule, ModuleMap};
use crate::poly::{
    parse_poly, Coefficient, MonomialOrder, Poly, PolyMatrix, Ring, RingData, VecPoly,
};
use crate::resolve::FreeComplex;
use crate::scalar::RatFun;

/// What a file contains, decided from its first significant line.
/// Extensions are a convention, not a contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Ring,
    Module,
    Complex,
    Map,
    Matrix,
    /// Headerless list of polynomials or vectors, one per line.
    Vectors,
}

pub fn detect_kind(text: &str) -> FileKind {
    let first = logical_lines(text)
        .into_iter()
        .next()
        .map(|(_, l)| l.to_string())
        .unwrap_or_default();
    if first.starts_with("params:") || first.starts_with("vars:") {
        FileKind::Ring
    } else if first.starts_with("module ") {
        FileKind::Module
    } else if first.starts_with("complex ") {
        FileKind::Complex
    } else if first.starts_with("map ") {
        FileKind::Map
    } else if first.starts_with("matrix ") {
        FileKind::Matrix
    } else {
        FileKind::Vectors
    }
}

/// Non-blank, non-comment lines with their original 1-based numbers.
fn logical_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn at_line(line: usize, e: Error) -> Error {
    Error::input(format!("line {line}: {e}"))
}

fn input_at(line: usize, msg: impl Into<String>) -> Error {
    Error::input(format!("line {line}: {}", msg.into()))
}

/// Prefix text-level errors with the file path. Structural errors
/// (NotAComplex, NotAHomomorphism, ...) pass through untouched so
/// callers can still match on them.
fn with_path(path: &Path, e: Error) -> Error {
    match e {
        Error::Input { msg } => Error::input(format!("{}: {msg}", path.display())),
        Error::Parse { .. } | Error::UnknownSymbol { .. } => {
            Error::input(format!("{}: {e}", path.display()))
        }
        other => other,
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

/// Resolve a reference found inside `from` against its directory.
fn sibling(from: &Path, reference: &str) -> PathBuf {
    match from.parent() {
        Some(dir) if !dir.as_os_str().is_empty() => dir.join(reference),
        _ => PathBuf::from(reference),
    }
}

// ---------------------------------------------------------------------
// Rings

/// `params: u1; vars: x1,x2; order: grevlex`. Semicolons and newlines
/// both separate fields; `params` may be absent for a plain Q[x] ring.
pub fn parse_ring(text: &str) -> Result<Ring> {
    let mut params: Vec<String> = Vec::new();
    let mut vars: Vec<String> = Vec::new();
    let mut order: MonomialOrder = MonomialOrder::GrevLex;
    let mut saw_vars = false;
    for (line, content) in logical_lines(text) {
        for field in content.split(';') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let (key, value) = field
                .split_once(':')
                .ok_or_else(|| input_at(line, format!("expected `key: value`, got `{field}`")))?;
            let value = value.trim();
            match key.trim() {
                "params" => params = name_list(value),
                "vars" => {
                    vars = name_list(value);
                    saw_vars = true;
                }
                "order" => order = parse_order(value).map_err(|e| at_line(line, e))?,
                other => return Err(input_at(line, format!("unknown ring field `{other}`"))),
            }
        }
    }
    if !saw_vars {
        return Err(Error::input("ring file has no `vars:` field"));
    }
    RingData::new(params, vars, order)
}

fn name_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_order(value: &str) -> Result<MonomialOrder> {
    match value {
        "grevlex" => Ok(MonomialOrder::GrevLex),
        "lex" => Ok(MonomialOrder::Lex),
        other => {
            if let Some(inner) = other.strip_prefix("block(").and_then(|s| s.strip_suffix(')')) {
                let k: usize = inner
                    .trim()
                    .parse()
                    .map_err(|_| Error::input(format!("bad block size `{inner}`")))?;
                Ok(MonomialOrder::Block { lex_prefix: k })
            } else {
                Err(Error::input(format!("unknown order `{other}`")))
            }
        }
    }
}

pub fn render_ring(ring: &Ring) -> String {
    let order = match ring.order() {
        MonomialOrder::GrevLex => "grevlex".to_string(),
        MonomialOrder::Lex => "lex".to_string(),
        MonomialOrder::Block { lex_prefix } => format!("block({lex_prefix})"),
    };
    if ring.nparams() == 0 {
        format!("vars: {}; order: {order}\n", ring.vars().join(","))
    } else {
        format!(
            "params: {}; vars: {}; order: {order}\n",
            ring.params().join(","),
            ring.vars().join(","),
        )
    }
}

pub fn load_ring(path: &Path) -> Result<Ring> {
    parse_ring(&read_file(path)?).map_err(|e| with_path(path, e))
}

// ---------------------------------------------------------------------
// Polynomial and vector lists (headerless)

/// One vector per line, entries comma-separated. The rank is checked
/// when given and inferred from the first line otherwise.
pub fn parse_vectors(ring: &Ring, rank: Option<usize>, text: &str) -> Result<Vec<VecPoly<RatFun>>> {
    let mut out = Vec::new();
    let mut want = rank;
    for (line, content) in logical_lines(text) {
        let entries = split_entries(ring, line, content)?;
        match want {
            None => want = Some(entries.len()),
            Some(r) if r != entries.len() => {
                return Err(input_at(
                    line,
                    format!("expected {r} entries, found {}", entries.len()),
                ));
            }
            Some(_) => {}
        }
        out.push(VecPoly::from_entries(ring, entries));
    }
    Ok(out)
}

/// One polynomial per line.
pub fn parse_ideal(ring: &Ring, text: &str) -> Result<Vec<Poly<RatFun>>> {
    let vs = parse_vectors(ring, Some(1), text)?;
    Ok(vs.into_iter().map(|v| v.entry(0).clone()).collect())
}

fn split_entries(ring: &Ring, line: usize, content: &str) -> Result<Vec<Poly<RatFun>>> {
    content
        .split(',')
        .map(|part| parse_poly::<RatFun>(ring, part).map_err(|e| at_line(line, e)))
        .collect()
}

pub fn render_vectors<C: Coefficient>(vs: &[VecPoly<C>]) -> String {
    let mut out = String::new();
    for v in vs {
        out.push_str(&v.render());
        out.push('\n');
    }
    out
}

pub fn render_ideal<C: Coefficient>(ps: &[Poly<C>]) -> String {
    let mut out = String::new();
    for p in ps {
        out.push_str(&p.render());
        out.push('\n');
    }
    out
}

pub fn load_vectors(path: &Path, ring: &Ring, rank: Option<usize>) -> Result<Vec<VecPoly<RatFun>>> {
    parse_vectors(ring, rank, &read_file(path)?).map_err(|e| with_path(path, e))
}

pub fn load_ideal(path: &Path, ring: &Ring) -> Result<Vec<Poly<RatFun>>> {
    parse_ideal(ring, &read_file(path)?).map_err(|e| with_path(path, e))
}

// ---------------------------------------------------------------------
// Matrices (headerless ring: supplied by the caller)

/// `matrix <name> rows <r> cols <c>` followed by r rows, entries
/// comma-separated. A matrix with no entries has no body lines.
pub fn parse_matrix(ring: &Ring, text: &str) -> Result<(String, PolyMatrix<RatFun>)> {
    let lines = logical_lines(text);
    let (header_line, header) = lines
        .first()
        .ok_or_else(|| Error::input("empty matrix file"))?;
    let fields = header_fields(*header_line, header, "matrix", &["rows", "cols"])?;
    let name = fields["matrix"].clone();
    let rows: usize = parse_count(*header_line, &fields["rows"], "rows")?;
    let cols: usize = parse_count(*header_line, &fields["cols"], "cols")?;
    let body = &lines[1..];
    let expected = if rows == 0 || cols == 0 { 0 } else { rows };
    if body.len() != expected {
        return Err(input_at(
            *header_line,
            format!("expected {expected} row lines, found {}", body.len()),
        ));
    }
    let mut a = PolyMatrix::zero(ring, rows, cols);
    for (i, (line, content)) in body.iter().enumerate() {
        let entries = split_entries(ring, *line, content)?;
        if entries.len() != cols {
            return Err(input_at(
                *line,
                format!("expected {cols} entries, found {}", entries.len()),
            ));
        }
        for (j, p) in entries.into_iter().enumerate() {
            a.set(i, j, p);
        }
    }
    Ok((name, a))
}

pub fn render_matrix<C: Coefficient>(name: &str, a: &PolyMatrix<C>) -> String {
    let mut out = format!("matrix {name} rows {} cols {}\n", a.rows(), a.cols());
    if a.rows() > 0 && a.cols() > 0 {
        for row in a.render_rows() {
            out.push_str(&row);
            out.push('\n');
        }
    }
    out
}

pub fn load_matrix(path: &Path, ring: &Ring) -> Result<(String, PolyMatrix<RatFun>)> {
    parse_matrix(ring, &read_file(path)?).map_err(|e| with_path(path, e))
}

// ---------------------------------------------------------------------
// Modules

/// `module <name> ring <ringref> gens <g>` followed by one relation
/// column per line, each with g comma-separated entries. The ringref is
/// a path relative to the module file.
pub fn load_module(path: &Path) -> Result<(String, FPModule<RatFun>)> {
    let text = read_file(path)?;
    parse_module(&text, |r| load_ring(&sibling(path, r))).map_err(|e| with_path(path, e))
}

pub fn parse_module(
    text: &str,
    mut resolve: impl FnMut(&str) -> Result<Ring>,
) -> Result<(String, FPModule<RatFun>)> {
    let lines = logical_lines(text);
    let (header_line, header) = lines
        .first()
        .ok_or_else(|| Error::input("empty module file"))?;
    let fields = header_fields(*header_line, header, "module", &["ring", "gens"])?;
    let name = fields["module"].clone();
    let ring = resolve(&fields["ring"])?;
    let gens: usize = parse_count(*header_line, &fields["gens"], "gens")?;
    let mut cols = Vec::new();
    for (line, content) in &lines[1..] {
        let entries = split_entries(&ring, *line, content)?;
        if entries.len() != gens {
            return Err(input_at(
                *line,
                format!("relation has {} entries, module has {gens} generators", entries.len()),
            ));
        }
        cols.push(VecPoly::from_entries(&ring, entries));
    }
    let presentation = PolyMatrix::from_cols(&ring, gens, &cols);
    Ok((name, FPModule::present(presentation)))
}

pub fn render_module<C: Coefficient>(name: &str, ringref: &str, m: &FPModule<C>) -> String {
    let mut out = format!("module {name} ring {ringref} gens {}\n", m.gens());
    for j in 0..m.presentation().cols() {
        out.push_str(&m.presentation().col(j).render());
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------
// Complexes

/// `complex <name> ring <ringref> ranks <r0,r1,...,rl>` followed by one
/// `map <i>` block per differential, i = 1..l, each holding r_{i-1}
/// rows of r_i comma-separated entries. Blocks for maps without entries
/// are just the `map <i>` line. Construction re-checks that consecutive
/// maps compose to zero.
pub fn load_complex(path: &Path) -> Result<(String, FreeComplex<RatFun>)> {
    let text = read_file(path)?;
    parse_complex(&text, |r| load_ring(&sibling(path, r))).map_err(|e| with_path(path, e))
}

pub fn parse_complex(
    text: &str,
    mut resolve: impl FnMut(&str) -> Result<Ring>,
) -> Result<(String, FreeComplex<RatFun>)> {
    let lines = logical_lines(text);
    let (header_line, header) = lines
        .first()
        .ok_or_else(|| Error::input("empty complex file"))?;
    let fields = header_fields(*header_line, header, "complex", &["ring", "ranks"])?;
    let name = fields["complex"].clone();
    let ring = resolve(&fields["ring"])?;
    let ranks: Vec<usize> = fields["ranks"]
        .split(',')
        .map(|s| parse_count(*header_line, s.trim(), "rank"))
        .collect::<Result<_>>()?;
    if ranks.is_empty() {
        return Err(input_at(*header_line, "a complex needs at least one rank"));
    }

    let mut maps = Vec::new();
    let mut pos = 1;
    for i in 1..ranks.len() {
        let (line, content) = lines
            .get(pos)
            .ok_or_else(|| Error::input(format!("missing `map {i}` block")))?;
        if *content != format!("map {i}") {
            return Err(input_at(*line, format!("expected `map {i}`, got `{content}`")));
        }
        pos += 1;
        let (rows, cols) = (ranks[i - 1], ranks[i]);
        let mut a = PolyMatrix::zero(&ring, rows, cols);
        if rows > 0 && cols > 0 {
            for r in 0..rows {
                let (line, content) = lines
                    .get(pos)
                    .ok_or_else(|| Error::input(format!("map {i}: missing row {}", r + 1)))?;
                let entries = split_entries(&ring, *line, content)?;
                if entries.len() != cols {
                    return Err(input_at(
                        *line,
                        format!("expected {cols} entries, found {}", entries.len()),
                    ));
                }
                for (c, p) in entries.into_iter().enumerate() {
                    a.set(r, c, p);
                }
                pos += 1;
            }
        }
        maps.push(a);
    }
    if pos != lines.len() {
        let (line, content) = lines[pos];
        return Err(input_at(line, format!("unexpected trailing line `{content}`")));
    }
    let complex = FreeComplex::new(&ring, ranks, maps)?;
    Ok((name, complex))
}

pub fn render_complex<C: Coefficient>(name: &str, ringref: &str, c: &FreeComplex<C>) -> String {
    let ranks: Vec<String> = c.ranks().iter().map(|r| r.to_string()).collect();
    let mut out = format!("complex {name} ring {ringref} ranks {}\n", ranks.join(","));
    for i in 1..=c.length() {
        out.push_str(&format!("map {i}\n"));
        let a = c.phi(i);
        if a.rows() > 0 && a.cols() > 0 {
            for row in a.render_rows() {
                out.push_str(&row);
                out.push('\n');
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// Module maps

/// `map <name> source <modref> target <modref>` followed by one line
/// per source generator: its image in the target, comma-separated over
/// the target's generators. The level-one lift is recomputed on load,
/// which re-checks that the matrix respects the relations.
pub fn load_map(path: &Path, cert: &mut Certificate) -> Result<(String, ModuleMap<RatFun>)> {
    let text = read_file(path)?;
    let lines = logical_lines(&text);
    let (header_line, header) = lines
        .first()
        .ok_or_else(|| Error::input(format!("{}: empty map file", path.display())))?;
    let fields = header_fields(*header_line, header, "map", &["source", "target"])
        .map_err(|e| with_path(path, e))?;
    let name = fields["map"].clone();
    let (_, source) = load_module(&sibling(path, &fields["source"]))?;
    let (_, target) = load_module(&sibling(path, &fields["target"]))?;
    if source.ring() != target.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = source.ring().clone();

    let body = &lines[1..];
    if body.len() != source.gens() {
        return Err(with_path(
            path,
            input_at(
                *header_line,
                format!("expected {} image lines, found {}", source.gens(), body.len()),
            ),
        ));
    }
    let mut cols = Vec::new();
    for (line, content) in body {
        let entries = split_entries(&ring, *line, content).map_err(|e| with_path(path, e))?;
        if entries.len() != target.gens() {
            return Err(with_path(
                path,
                input_at(
                    *line,
                    format!(
                        "image has {} entries, target has {} generators",
                        entries.len(),
                        target.gens()
                    ),
                ),
            ));
        }
        cols.push(VecPoly::from_entries(&ring, entries));
    }
    let v0 = PolyMatrix::from_cols(&ring, target.gens(), &cols);
    let map = ModuleMap::lift_map(v0, &source, &target, cert)?;
    Ok((name, map))
}

pub fn render_map<C: Coefficient>(
    name: &str,
    srcref: &str,
    tgtref: &str,
    v: &ModuleMap<C>,
) -> String {
    let mut out = format!("map {name} source {srcref} target {tgtref}\n");
    for j in 0..v.source().gens() {
        out.push_str(&v.v0().col(j).render());
        out.push('\n');
    }
    out
}

/// The ring a file is over, read from its header without parsing the
/// body. Ok(None) for headerless files, which borrow a ring from their
/// neighbours. Used to size the certificate before any lifting work.
pub fn peek_ring(path: &Path) -> Result<Option<Ring>> {
    let text = read_file(path)?;
    let lines = logical_lines(&text);
    let first = match lines.first() {
        Some((line, content)) => (*line, *content),
        None => return Ok(None),
    };
    match detect_kind(&text) {
        FileKind::Ring => parse_ring(&text).map(Some).map_err(|e| with_path(path, e)),
        FileKind::Module => {
            let fields = header_fields(first.0, first.1, "module", &["ring", "gens"])
                .map_err(|e| with_path(path, e))?;
            load_ring(&sibling(path, &fields["ring"])).map(Some)
        }
        FileKind::Complex => {
            let fields = header_fields(first.0, first.1, "complex", &["ring", "ranks"])
                .map_err(|e| with_path(path, e))?;
            load_ring(&sibling(path, &fields["ring"])).map(Some)
        }
        FileKind::Map => {
            let fields = header_fields(first.0, first.1, "map", &["source", "target"])
                .map_err(|e| with_path(path, e))?;
            peek_ring(&sibling(path, &fields["source"]))
        }
        FileKind::Matrix | FileKind::Vectors => Ok(None),
    }
}

// ---------------------------------------------------------------------
// Header plumbing

/// Parse `keyword v1 key2 v2 key3 v3` headers. The keyword's own value
/// is the object name; remaining keys must appear in order.
fn header_fields(
    line: usize,
    header: &str,
    keyword: &str,
    keys: &[&str],
) -> Result<BTreeMap<String, String>> {
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.first() != Some(&keyword) {
        return Err(input_at(line, format!("expected `{keyword}` header")));
    }
    if tokens.len() != 2 + 2 * keys.len() {
        return Err(input_at(
            line,
            format!("malformed `{keyword}` header: `{header}`"),
        ));
    }
    let mut fields = BTreeMap::new();
    fields.insert(keyword.to_string(), tokens[1].to_string());
    for (i, key) in keys.iter().enumerate() {
        let k = tokens[2 + 2 * i];
        let v = tokens[3 + 2 * i];
        if k != *key {
            return Err(input_at(line, format!("expected `{key}`, got `{k}`")));
        }
        fields.insert(key.to_string(), v.to_string());
    }
    Ok(fields)
}

fn parse_count(line: usize, text: &str, what: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| input_at(line, format!("bad {what} `{text}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use std::io::Write;

    fn pring() -> Ring {
        RingData::parametric(&["u1"], &["x1", "x2"], MonomialOrder::GrevLex)
    }

    #[test]
    fn ring_round_trip() {
        let text = "params: u1; vars: x1,x2; order: grevlex\n";
        let ring = parse_ring(text).unwrap();
        assert_eq!(ring.params(), ["u1".to_string()]);
        assert_eq!(ring.vars(), ["x1".to_string(), "x2".to_string()]);
        assert_eq!(render_ring(&ring), text);

        let plain = parse_ring("vars: x1; order: lex").unwrap();
        assert_eq!(render_ring(&plain), "vars: x1; order: lex\n");
        assert_eq!(parse_ring(&render_ring(&plain)).unwrap(), plain);

        // fields may sit on separate lines
        let split = parse_ring("params: u1\nvars: x1,x2\norder: grevlex\n").unwrap();
        assert_eq!(split, ring);
    }

    #[test]
    fn ring_rejects_junk() {
        assert!(parse_ring("vars: x1; order: totaldeg").is_err());
        assert!(parse_ring("params: u1; order: lex").is_err());
        assert!(parse_ring("vars: x1; color: blue").is_err());
        assert!(parse_ring("vars: x1, x1; order: lex").is_err());
    }

    #[test]
    fn ideal_and_vector_lists() {
        let r = pring();
        let ps = parse_ideal(&r, "# the ideal\nx1^2 - u1\nx2\n").unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].render(), "x1^2 - u1");

        let vs = parse_vectors(&r, None, "x1, 0\n0, x2\n").unwrap();
        assert_eq!(vs.len(), 2);
        assert_eq!(vs[0].render(), "x1, 0");
        assert_eq!(render_vectors(&vs), "x1, 0\n0, x2\n");

        // inconsistent widths are an error
        assert!(parse_vectors(&r, None, "x1, 0\nx2\n").is_err());
        assert!(parse_vectors(&r, Some(3), "x1, 0\n").is_err());
    }

    #[test]
    fn matrix_round_trip_is_byte_identical() {
        let r = pring();
        let text = "matrix a rows 2 cols 2\nx1, u1*x2\n0, x1 - 1\n";
        let (name, a) = parse_matrix(&r, text).unwrap();
        assert_eq!(name, "a");
        assert_eq!(render_matrix(&name, &a), text);

        let empty = "matrix z rows 0 cols 3\n";
        let (name, z) = parse_matrix(&r, empty).unwrap();
        assert_eq!(z.cols(), 3);
        assert_eq!(render_matrix(&name, &z), empty);
    }

    #[test]
    fn matrix_row_count_is_checked() {
        let r = pring();
        assert!(parse_matrix(&r, "matrix a rows 2 cols 1\nx1\n").is_err());
        assert!(parse_matrix(&r, "matrix a rows 1 cols 2\nx1\n").is_err());
        assert!(parse_matrix(&r, "matrix a rows 1\nx1\n").is_err());
    }

    #[test]
    fn module_round_trip() {
        let r = pring();
        let text = "module q ring r.ring gens 2\nx1, 0\nu1*x2, x2^2\n";
        let (name, m) = parse_module(text, |reference| {
            assert_eq!(reference, "r.ring");
            Ok(r.clone())
        })
        .unwrap();
        assert_eq!(name, "q");
        assert_eq!(m.gens(), 2);
        assert_eq!(m.presentation().cols(), 2);
        assert_eq!(render_module(&name, "r.ring", &m), text);
    }

    #[test]
    fn module_with_wrong_column_length_is_rejected() {
        let r = pring();
        let err = parse_module("module q ring r.ring gens 2\nx1\n", |_| Ok(r.clone()))
            .unwrap_err();
        assert!(err.to_string().contains("2 generators"), "{err}");
    }

    #[test]
    fn complex_round_trip_and_composite_check() {
        let r = pring();
        let text = "complex kz ring r.ring ranks 1,2,1\nmap 1\nx1, x2\nmap 2\nx2\n-x1\n";
        let (name, c) = parse_complex(text, |_| Ok(r.clone())).unwrap();
        assert_eq!(name, "kz");
        assert_eq!(c.ranks(), &[1, 2, 1]);
        assert_eq!(render_complex(&name, "r.ring", &c), text);

        // maps that do not compose to zero are refused at parse time
        let bad = "complex b ring r.ring ranks 1,2,1\nmap 1\nx1, x2\nmap 2\nx2\nx1\n";
        assert_eq!(
            parse_complex(bad, |_| Ok(r.clone())).unwrap_err(),
            Error::NotAComplex { index: 1 }
        );
    }

    #[test]
    fn kind_detection() {
        assert_eq!(detect_kind("params: u1; vars: x1; order: lex"), FileKind::Ring);
        assert_eq!(detect_kind("# c\nmodule q ring r gens 1\n"), FileKind::Module);
        assert_eq!(detect_kind("complex c ring r ranks 1,1\nmap 1\nx1\n"), FileKind::Complex);
        assert_eq!(detect_kind("map v source a target b\n"), FileKind::Map);
        assert_eq!(detect_kind("matrix a rows 1 cols 1\nx1\n"), FileKind::Matrix);
        assert_eq!(detect_kind("x1, x2\n"), FileKind::Vectors);
    }

    #[test]
    fn files_load_with_relative_references() {
        let dir = tempfile::tempdir().unwrap();
        let write = |name: &str, body: &str| {
            let p = dir.path().join(name);
            let mut f = fs::File::create(&p).unwrap();
            f.write_all(body.as_bytes()).unwrap();
            p
        };
        write("r.ring", "params: u1; vars: x1,x2; order: grevlex\n");
        let lpath = write("l.mod", "module l ring r.ring gens 1\nx1*u1\n");
        let mpath = write("m.mod", "module m ring r.ring gens 1\n");
        // free source, so any image works
        let vpath = write("v.map", "map v source m.mod target l.mod\nx2\n");

        let (_, l) = load_module(&lpath).unwrap();
        assert_eq!(l.presentation().entry(0, 0).render(), "u1*x1");
        let (_, m) = load_module(&mpath).unwrap();
        assert_eq!(m.presentation().cols(), 0);

        let mut cert = Certificate::new(1);
        let (name, v) = load_map(&vpath, &mut cert).unwrap();
        assert_eq!(name, "v");
        assert_eq!(v.v0().entry(0, 0).render(), "x2");

        // the other direction is refused: a torsion module has no
        // nonzero map into a free one
        let bad = write("w.map", "map w source l.mod target m.mod\n1\n");
        let mut cert = Certificate::new(1);
        assert_eq!(
            load_map(&bad, &mut cert).unwrap_err(),
            Error::NotAHomomorphism
        );
    }

    #[test]
    fn load_errors_carry_the_path() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("broken.ring");
        fs::write(&p, "vars: x1; order: sideways\n").unwrap();
        let err = load_ring(&p).unwrap_err();
        assert!(err.to_string().contains("broken.ring"), "{err}");
        assert!(load_ring(&dir.path().join("absent.ring")).is_err());
    }
}
