//! Line-based text format for structure constants.
//!
//! ```text
//! format 1
//! field gf 5
//! dim 2
//! op star
//! star: e1 e2 = 1 e2 + -1/2 e1
//! tensor r: e1 e2 = 1
//! tensor alpha rank 3
//! tensor alpha: e1 e1 e2 = 3
//! rep l vdim 2
//! rep l e1 = [0,1 ; 0,0]
//! map theta = [1,0 ; 0,2]
//! ```
//!
//! Declarations may carry `dim K` when a structure lives on a space other
//! than the file dimension. Unlisted entries are zero. Printing is canonical:
//! names in byte order, ascending indices, nonzero entries only.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};
use crate::tensor::{MulTensor, Tensor3};

/// A rank-2 or rank-3 coefficient array over a space of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedTensor {
    Rank2(Matrix),
    Rank3(Tensor3),
}

impl NamedTensor {
    pub fn dim(&self) -> usize {
        match self {
            NamedTensor::Rank2(m) => m.rows(),
            NamedTensor::Rank3(t) => t.dim(),
        }
    }
}

/// A family of square matrices indexed by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepFamily {
    pub vdim: usize,
    pub mats: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: Field,
    pub dim: usize,
    pub ops: BTreeMap<String, MulTensor>,
    pub tensors: BTreeMap<String, NamedTensor>,
    pub reps: BTreeMap<String, RepFamily>,
    pub maps: BTreeMap<String, Matrix>,
}

impl AlgebraFile {
    pub fn new(field: Field, dim: usize) -> Self {
        AlgebraFile {
            field,
            dim,
            ops: BTreeMap::new(),
            tensors: BTreeMap::new(),
            reps: BTreeMap::new(),
            maps: BTreeMap::new(),
        }
    }

    pub fn op(&self, name: &str) -> Result<&MulTensor> {
        self.ops.get(name).ok_or_else(|| missing("op", name))
    }

    pub fn rank2(&self, name: &str) -> Result<&Matrix> {
        match self.tensors.get(name) {
            Some(NamedTensor::Rank2(m)) => Ok(m),
            Some(NamedTensor::Rank3(_)) => {
                Err(Error::Invalid(format!("tensor {name} must have rank 2")))
            }
            None => Err(missing("tensor", name)),
        }
    }

    pub fn rank3(&self, name: &str) -> Result<&Tensor3> {
        match self.tensors.get(name) {
            Some(NamedTensor::Rank3(t)) => Ok(t),
            Some(NamedTensor::Rank2(_)) => {
                Err(Error::Invalid(format!("tensor {name} must have rank 3")))
            }
            None => Err(missing("tensor", name)),
        }
    }

    pub fn rep(&self, name: &str) -> Result<&RepFamily> {
        self.reps.get(name).ok_or_else(|| missing("rep", name))
    }

    pub fn map(&self, name: &str) -> Result<&Matrix> {
        self.maps.get(name).ok_or_else(|| missing("map", name))
    }

    pub fn with_op(mut self, name: &str, m: MulTensor) -> Self {
        self.ops.insert(name.to_string(), m);
        self
    }

    pub fn with_tensor(mut self, name: &str, t: NamedTensor) -> Self {
        self.tensors.insert(name.to_string(), t);
        self
    }

    pub fn with_rep(mut self, name: &str, mats: Vec<Matrix>, vdim: usize) -> Self {
        self.reps.insert(name.to_string(), RepFamily { vdim, mats });
        self
    }

    pub fn with_map(mut self, name: &str, m: Matrix) -> Self {
        self.maps.insert(name.to_string(), m);
        self
    }
}

fn missing(kind: &str, name: &str) -> Error {
    Error::Invalid(format!("file has no {kind} named {name}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

const PUNCT: &[char] = &[':', '=', '+', '[', ']', ',', ';'];

fn tokenize(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (pos, ch) in line.char_indices() {
        let boundary = ch.is_whitespace() || PUNCT.contains(&ch);
        if boundary {
            if let Some(s) = start.take() {
                out.push(Tok {
                    text: &line[s..pos],
                    col: s + 1,
                });
            }
            if !ch.is_whitespace() {
                out.push(Tok {
                    text: &line[pos..pos + 1],
                    col: pos + 1,
                });
            }
        } else if start.is_none() {
            start = Some(pos);
        }
    }
    if let Some(s) = start {
        out.push(Tok {
            text: &line[s..],
            col: s + 1,
        });
    }
    out
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

const KEYWORDS: &[&str] = &["format", "field", "dim", "op", "tensor", "rep", "map"];

struct Cursor<'a> {
    toks: Vec<Tok<'a>>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn err_at(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: col,
            message: msg.into(),
        }
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        self.err_at(self.col(), msg)
    }

    fn peek(&self) -> Option<&'a str> {
        self.toks.get(self.pos).map(|t| t.text)
    }

    fn next(&mut self, what: &str) -> Result<Tok<'a>> {
        let t = self
            .toks
            .get(self.pos)
            .copied()
            .ok_or_else(|| self.err(format!("expected {what}")))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, text: &str) -> Result<()> {
        let col = self.col();
        let t = self.next(&format!("'{text}'"))?;
        if t.text != text {
            return Err(self.err_at(col, format!("expected '{text}', found '{}'", t.text)));
        }
        Ok(())
    }

    fn eat(&mut self, text: &str) -> bool {
        if self.peek() == Some(text) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn done(&self) -> Result<()> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(self.err_at(t.col, format!("unexpected '{}'", t.text))),
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        let t = self.next("a name")?;
        if !is_ident(t.text) {
            return Err(self.err_at(t.col, format!("'{}' is not a valid name", t.text)));
        }
        Ok(t.text)
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let t = self.next(what)?;
        t.text
            .parse()
            .map_err(|_| self.err_at(t.col, format!("expected {what}, found '{}'", t.text)))
    }

    /// `eK` with `1 <= K <= bound`, returned zero-based.
    fn basis(&mut self, bound: usize) -> Result<usize> {
        let t = self.next("a basis element eK")?;
        let idx = t
            .text
            .strip_prefix('e')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| {
                self.err_at(
                    t.col,
                    format!("expected a basis element eK, found '{}'", t.text),
                )
            })?;
        if idx == 0 || idx > bound {
            return Err(self.err_at(
                t.col,
                format!("basis index e{idx} out of range 1..={bound}"),
            ));
        }
        Ok(idx - 1)
    }

    fn scalar(&mut self, field: Field) -> Result<Scalar> {
        let t = self.next("a scalar")?;
        field
            .parse(t.text)
            .map_err(|e| self.err_at(t.col, e.to_string()))
    }

    /// `[a,b ; c,d]`, row-major.
    fn matrix(&mut self, field: Field) -> Result<Matrix> {
        let open = self.col();
        self.expect("[")?;
        let mut rows: Vec<Vec<Scalar>> = vec![Vec::new()];
        if !self.eat("]") {
            loop {
                rows.last_mut().expect("nonempty").push(self.scalar(field)?);
                let col = self.col();
                match self.next("',', ';' or ']'")?.text {
                    "," => {}
                    ";" => rows.push(Vec::new()),
                    "]" => break,
                    other => {
                        return Err(
                            self.err_at(col, format!("expected ',', ';' or ']', found '{other}'"))
                        )
                    }
                }
            }
        } else {
            rows.clear();
        }
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(self.err_at(open, "matrix rows have different lengths"));
        }
        let n = rows.len();
        Matrix::from_rows(field, n, cols, rows.into_iter().flatten().collect())
    }

    /// Optional `dim K`, `vdim M`, `rank R` attributes of a declaration.
    fn attrs(&mut self, allowed: &[&str]) -> Result<BTreeMap<&'a str, usize>> {
        let mut out = BTreeMap::new();
        while let Some(key) = self.peek() {
            let col = self.col();
            if !allowed.contains(&key) {
                return Err(self.err_at(col, format!("unexpected '{key}'")));
            }
            self.pos += 1;
            let v = self.number(&format!("a value for {key}"))?;
            if out.insert(key, v).is_some() {
                return Err(self.err_at(col, format!("repeated attribute '{key}'")));
            }
        }
        Ok(out)
    }
}

struct RepDraft {
    dim: usize,
    vdim: Option<usize>,
    mats: BTreeMap<usize, Matrix>,
    line: usize,
}

#[derive(Default)]
struct Draft {
    field: Option<Field>,
    dim: Option<usize>,
    ops: BTreeMap<String, MulTensor>,
    tensors: BTreeMap<String, NamedTensor>,
    reps: BTreeMap<String, RepDraft>,
    maps: BTreeMap<String, Matrix>,
    seen_entries: std::collections::BTreeSet<(String, Vec<usize>)>,
    format_seen: bool,
    any_content: bool,
}

impl Draft {
    fn field(&self, c: &Cursor) -> Result<Field> {
        self.field
            .ok_or_else(|| c.err_at(1, "'field' must be declared before this line"))
    }

    fn dim(&self, c: &Cursor) -> Result<usize> {
        self.dim
            .ok_or_else(|| c.err_at(1, "missing 'dim' declaration before this line"))
    }

    fn name_free(&self, c: &Cursor, col: usize, name: &str) -> Result<()> {
        let taken = self.ops.contains_key(name)
            || self.tensors.contains_key(name)
            || self.reps.contains_key(name)
            || self.maps.contains_key(name);
        if taken || KEYWORDS.contains(&name) {
            return Err(c.err_at(col, format!("name '{name}' is already in use")));
        }
        Ok(())
    }

    fn mark_entry(&mut self, c: &Cursor, col: usize, name: &str, idx: Vec<usize>) -> Result<()> {
        if !self.seen_entries.insert((name.to_string(), idx)) {
            return Err(c.err_at(col, format!("duplicate entry for {name}")));
        }
        Ok(())
    }

    fn line(&mut self, c: &mut Cursor) -> Result<()> {
        let first = c.toks[0];
        match first.text {
            "format" => {
                c.pos += 1;
                if self.any_content || self.format_seen {
                    return Err(c.err_at(first.col, "'format' must be the first declaration"));
                }
                let col = c.col();
                if c.number("a format version")? != 1 {
                    return Err(c.err_at(col, "only format 1 is supported"));
                }
                self.format_seen = true;
                return c.done();
            }
            "field" => {
                c.pos += 1;
                if self.field.is_some() {
                    return Err(c.err_at(first.col, "field declared twice"));
                }
                let col = c.col();
                let f = match c.next("'rational' or 'gf'")?.text {
                    "rational" => Field::Rational,
                    "gf" => {
                        let pcol = c.col();
                        let p = c.number("a prime")?;
                        Field::prime(p as u64).map_err(|e| c.err_at(pcol, e.to_string()))?
                    }
                    other => return Err(c.err_at(col, format!("unknown field '{other}'"))),
                };
                self.field = Some(f);
            }
            "dim" => {
                c.pos += 1;
                if self.dim.is_some() {
                    return Err(c.err_at(first.col, "dim declared twice"));
                }
                let col = c.col();
                let n = c.number("a dimension")?;
                if n == 0 {
                    return Err(c.err_at(col, "dimension must be positive"));
                }
                self.dim = Some(n);
            }
            "op" => {
                c.pos += 1;
                let (f, n) = (self.field(c)?, self.dim(c)?);
                let col = c.col();
                let name = c.ident()?;
                self.name_free(c, col, name)?;
                let attrs = c.attrs(&["dim"])?;
                let k = attrs.get("dim").copied().unwrap_or(n);
                self.ops.insert(name.to_string(), MulTensor::zeros(f, k));
            }
            "tensor" => {
                c.pos += 1;
                let (f, n) = (self.field(c)?, self.dim(c)?);
                let col = c.col();
                let name = c.ident()?;
                if c.eat(":") {
                    if !self.tensors.contains_key(name) {
                        self.name_free(c, col, name)?;
                    }
                    self.tensor_entry(c, col, name, f, n)?;
                } else {
                    self.name_free(c, col, name)?;
                    let attrs = c.attrs(&["dim", "rank"])?;
                    let k = attrs.get("dim").copied().unwrap_or(n);
                    let t = match attrs.get("rank").copied().unwrap_or(2) {
                        2 => NamedTensor::Rank2(Matrix::zeros(f, k, k)),
                        3 => NamedTensor::Rank3(Tensor3::zeros(f, k)),
                        r => return Err(c.err(format!("tensor rank {r} is not 2 or 3"))),
                    };
                    self.tensors.insert(name.to_string(), t);
                }
            }
            "rep" => {
                c.pos += 1;
                let (f, n) = (self.field(c)?, self.dim(c)?);
                let col = c.col();
                let name = c.ident()?;
                if c.peek()
                    .is_some_and(|t| t.starts_with('e') && t[1..].parse::<usize>().is_ok())
                {
                    if !self.reps.contains_key(name) {
                        self.name_free(c, col, name)?;
                        let line = c.line;
                        self.reps.insert(
                            name.to_string(),
                            RepDraft {
                                dim: n,
                                vdim: None,
                                mats: BTreeMap::new(),
                                line,
                            },
                        );
                    }
                    let rep = self.reps.get_mut(name).expect("inserted");
                    let bcol = c.col();
                    let i = c.basis(rep.dim)?;
                    c.expect("=")?;
                    let mcol = c.col();
                    let m = c.matrix(f)?;
                    if !m.is_square() {
                        return Err(c.err_at(mcol, "representation matrices must be square"));
                    }
                    match rep.vdim {
                        Some(v) if v != m.rows() => {
                            return Err(c.err_at(
                                mcol,
                                format!(
                                    "expected a {v}x{v} matrix, found {}x{}",
                                    m.rows(),
                                    m.cols()
                                ),
                            ))
                        }
                        _ => rep.vdim = Some(m.rows()),
                    }
                    if rep.mats.insert(i, m).is_some() {
                        return Err(c.err_at(bcol, format!("duplicate entry for {name}")));
                    }
                } else {
                    self.name_free(c, col, name)?;
                    let attrs = c.attrs(&["dim", "vdim"])?;
                    let line = c.line;
                    self.reps.insert(
                        name.to_string(),
                        RepDraft {
                            dim: attrs.get("dim").copied().unwrap_or(n),
                            vdim: attrs.get("vdim").copied(),
                            mats: BTreeMap::new(),
                            line,
                        },
                    );
                }
            }
            "map" => {
                c.pos += 1;
                let f = self.field(c)?;
                let col = c.col();
                let name = c.ident()?;
                self.name_free(c, col, name)?;
                c.expect("=")?;
                let m = c.matrix(f)?;
                self.maps.insert(name.to_string(), m);
            }
            _ => {
                let col = first.col;
                let name = c.ident()?;
                if !self.ops.contains_key(name) {
                    return Err(c.err_at(col, format!("'{name}' is not a declared operation")));
                }
                c.expect(":")?;
                let f = self.field(c)?;
                self.op_entry(c, col, name, f)?;
            }
        }
        c.done()
    }

    fn op_entry(&mut self, c: &mut Cursor, col: usize, name: &str, f: Field) -> Result<()> {
        let k = self.ops[name].dim();
        let i = c.basis(k)?;
        let j = c.basis(k)?;
        c.expect("=")?;
        self.mark_entry(c, col, name, vec![i, j])?;
        let mut terms = vec![f.zero(); k];
        loop {
            let s = c.scalar(f)?;
            let t = c.basis(k)?;
            terms[t] += &s;
            if !c.eat("+") {
                break;
            }
        }
        let op = self.ops.get_mut(name).expect("checked");
        for (t, v) in terms.into_iter().enumerate() {
            op.set(i, j, t, v);
        }
        Ok(())
    }

    fn tensor_entry(
        &mut self,
        c: &mut Cursor,
        col: usize,
        name: &str,
        f: Field,
        n: usize,
    ) -> Result<()> {
        let k = self.tensors.get(name).map_or(n, NamedTensor::dim);
        let mut idx = vec![c.basis(k)?, c.basis(k)?];
        if c.peek() != Some("=") {
            idx.push(c.basis(k)?);
        }
        c.expect("=")?;
        let v = c.scalar(f)?;
        let rank = idx.len();
        let t = self
            .tensors
            .entry(name.to_string())
            .or_insert_with(|| match rank {
                2 => NamedTensor::Rank2(Matrix::zeros(f, k, k)),
                _ => NamedTensor::Rank3(Tensor3::zeros(f, k)),
            });
        match t {
            NamedTensor::Rank2(m) if rank == 2 => m.set(idx[0], idx[1], v),
            NamedTensor::Rank3(t3) if rank == 3 => t3.set(idx[0], idx[1], idx[2], v),
            _ => return Err(c.err_at(col, format!("tensor {name} used with inconsistent rank"))),
        }
        self.mark_entry(c, col, name, idx)
    }
}

/// Parses the text format. Errors carry the one-based line and column.
pub fn parse_file(text: &str) -> Result<AlgebraFile> {
    let mut d = Draft::default();
    let mut last_line = 0;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        last_line = no + 1;
        let toks = tokenize(line);
        if toks.is_empty() {
            continue;
        }
        let mut c = Cursor {
            toks,
            pos: 0,
            line: no + 1,
            end_col: line.trim_end().len() + 1,
        };
        d.line(&mut c)?;
        if !matches!(c.toks[0].text, "format") {
            d.any_content = true;
        }
    }
    let eof = |msg: &str| Error::Parse {
        line: last_line.max(1),
        column: 1,
        message: msg.into(),
    };
    let field = d.field.ok_or_else(|| eof("missing 'field' declaration"))?;
    let dim = d.dim.ok_or_else(|| eof("missing 'dim' declaration"))?;
    let mut file = AlgebraFile::new(field, dim);
    file.ops = d.ops;
    file.tensors = d.tensors;
    file.maps = d.maps;
    for (name, rep) in d.reps {
        let vdim = rep.vdim.ok_or_else(|| Error::Parse {
            line: rep.line,
            column: 1,
            message: format!("rep {name} has no entries and no vdim"),
        })?;
        let mats = (0..rep.dim)
            .map(|i| {
                rep.mats
                    .get(&i)
                    .cloned()
                    .unwrap_or_else(|| Matrix::zeros(field, vdim, vdim))
            })
            .collect();
        file.reps.insert(name, RepFamily { vdim, mats });
    }
    Ok(file)
}

fn dim_attr(out: &mut String, k: usize, n: usize) {
    if k != n {
        let _ = write!(out, " dim {k}");
    }
}

fn write_matrix(out: &mut String, m: &Matrix) {
    out.push('[');
    for i in 0..m.rows() {
        if i > 0 {
            out.push_str(" ; ");
        }
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(","));
    }
    out.push(']');
}

/// Canonical text. `parse_file(&print_file(f)) == f` for every file.
pub fn print_file(file: &AlgebraFile) -> String {
    let n = file.dim;
    let mut out = String::new();
    let _ = writeln!(out, "format 1\nfield {}\ndim {n}", file.field);
    for (name, op) in &file.ops {
        let k = op.dim();
        let _ = write!(out, "op {name}");
        dim_attr(&mut out, k, n);
        out.push('\n');
        for i in 0..k {
            for j in 0..k {
                let terms: Vec<String> = (0..k)
                    .filter(|&t| !op.get(i, j, t).is_zero())
                    .map(|t| format!("{} e{}", op.get(i, j, t), t + 1))
                    .collect();
                if !terms.is_empty() {
                    let _ = writeln!(out, "{name}: e{} e{} = {}", i + 1, j + 1, terms.join(" + "));
                }
            }
        }
    }
    for (name, t) in &file.tensors {
        let _ = write!(out, "tensor {name}");
        dim_attr(&mut out, t.dim(), n);
        match t {
            NamedTensor::Rank2(m) => {
                out.push('\n');
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        if !m.get(i, j).is_zero() {
                            let _ = writeln!(
                                out,
                                "tensor {name}: e{} e{} = {}",
                                i + 1,
                                j + 1,
                                m.get(i, j)
                            );
                        }
                    }
                }
            }
            NamedTensor::Rank3(t3) => {
                out.push_str(" rank 3\n");
                let k = t3.dim();
                for i in 0..k {
                    for j in 0..k {
                        for l in 0..k {
                            let v = t3.get(i, j, l);
                            if !v.is_zero() {
                                let _ = writeln!(
                                    out,
                                    "tensor {name}: e{} e{} e{} = {v}",
                                    i + 1,
                                    j + 1,
                                    l + 1
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    for (name, rep) in &file.reps {
        let _ = write!(out, "rep {name}");
        dim_attr(&mut out, rep.mats.len(), n);
        let _ = writeln!(out, " vdim {}", rep.vdim);
        for (i, m) in rep.mats.iter().enumerate() {
            if !m.is_zero() {
                let _ = write!(out, "rep {name} e{} = ", i + 1);
                write_matrix(&mut out, m);
                out.push('\n');
            }
        }
    }
    for (name, m) in &file.maps {
        let _ = write!(out, "map {name} = ");
        write_matrix(&mut out, m);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_file(text) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => (line, column, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn minimal_dim_one() {
        let f = parse_file("field rational\ndim 1\nop star\nstar: e1 e1 = 1 e1\n").unwrap();
        let star = f.op("star").unwrap();
        assert!(star.get(0, 0, 0).is_one());
    }

    #[test]
    fn fractions_and_negative_terms() {
        let f =
            parse_file("field rational\ndim 2\nop star\nstar: e1 e2 = 1 e2 + -1/2 e1\n").unwrap();
        let star = f.op("star").unwrap();
        assert_eq!(star.get(0, 1, 0), &Field::Rational.ratio(-1, 2).unwrap());
        assert!(star.get(0, 1, 1).is_one());
    }

    #[test]
    fn missing_dim_names_the_line() {
        let (line, _, msg) = parse_err("field rational\nop star\n");
        assert_eq!(line, 2);
        assert!(msg.contains("dim"), "{msg}");
    }

    #[test]
    fn small_characteristic_rejected() {
        let (line, col, msg) = parse_err("field gf 3\ndim 1\n");
        assert_eq!((line, col), (1, 10));
        assert!(msg.contains("characteristic"), "{msg}");
    }

    #[test]
    fn index_out_of_range_points_at_token() {
        let (line, col, msg) = parse_err("field gf 5\ndim 2\nop star\nstar: e1 e3 = 1 e1\n");
        assert_eq!((line, col), (4, 10));
        assert!(msg.contains("out of range"), "{msg}");
    }

    #[test]
    fn tensors_reps_maps() {
        let text = "field gf 7\ndim 2\ntensor r: e1 e2 = 3\ntensor alpha: e2 e1 e1 = -1\n\
                    rep l e2 = [0,1 ; 0,0]\nmap theta = [1,0 ; 0,2]\n";
        let f = parse_file(text).unwrap();
        assert_eq!(f.rank2("r").unwrap().get(0, 1), &Field::Prime(7).int(3));
        assert_eq!(
            f.rank3("alpha").unwrap().get(1, 0, 0),
            &Field::Prime(7).int(6)
        );
        let l = f.rep("l").unwrap();
        assert_eq!((l.vdim, l.mats.len()), (2, 2));
        assert!(l.mats[0].is_zero());
        assert_eq!(f.map("theta").unwrap().get(1, 1), &Field::Prime(7).int(2));
    }

    #[test]
    fn roundtrip_is_canonical() {
        let text = "# comment\nfield rational\ndim 2\nop star\nstar: e2 e1 = -1 e2 + 1/3 e1\n\
                    op pstar dim 1\ntensor zero\nrep l vdim 1\nmap theta = [1 ; 0]\n";
        let f = parse_file(text).unwrap();
        let printed = print_file(&f);
        assert_eq!(parse_file(&printed).unwrap(), f);
        assert_eq!(print_file(&parse_file(&printed).unwrap()), printed);
        assert!(
            printed.contains("star: e2 e1 = 1/3 e1 + -1 e2\n"),
            "{printed}"
        );
    }

    #[test]
    fn duplicates_rejected() {
        let (line, _, msg) =
            parse_err("field gf 5\ndim 1\nop star\nstar: e1 e1 = 1 e1\nstar: e1 e1 = 2 e1\n");
        assert_eq!(line, 5);
        assert!(msg.contains("duplicate"), "{msg}");
        let (line, _, _) = parse_err("field gf 5\ndim 1\nop star\nop star\n");
        assert_eq!(line, 4);
    }

    #[test]
    fn undeclared_operation() {
        let (line, col, _) = parse_err("field gf 5\ndim 1\nstar: e1 e1 = 1 e1\n");
        assert_eq!((line, col), (3, 1));
    }
}
