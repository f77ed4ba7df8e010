//! Line-oriented DSL for presentations.
//!
//! ```text
//! name Lambda2p
//! field 3 1
//! param lambda = g
//! vertices v1 v2
//! arrow alpha: v1 -> v1
//! rel alpha.alpha.alpha = gamma.beta
//! rel beta.gamma
//! form beta.alpha.gamma = 1
//! ```
//!
//! Relations are polynomials set to zero; `lhs = rhs` is read as `lhs - rhs`.
//! A term is `coeff * path` with an optional scalar coefficient, which may use
//! `g`, declared parameters, parentheses and integer powers.

use crate::field::{Field, Fq};

use super::{
    format_coeff, validate_presentation, Arrow, Path, Pos, Presentation, PresentationError, Quiver,
    RelationPoly,
};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    To,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
    /// Byte range in the line.
    start: usize,
    end: usize,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> PresentationError {
    PresentationError::Syntax {
        pos: Pos { line, col },
        msg: msg.into(),
    }
}

fn tokenize(line_no: usize, text: &str) -> Result<Vec<Token>, PresentationError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            Tok::Ident(text[start..i].to_string())
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = text[start..i]
                .parse::<u64>()
                .map_err(|e| syntax(line_no, start + 1, e.to_string()))?;
            Tok::Int(n)
        } else if c == b'-' && bytes.get(i + 1) == Some(&b'>') {
            i += 2;
            Tok::To
        } else if b"()+-*^.=:".contains(&c) {
            i += 1;
            Tok::Sym(c as char)
        } else {
            return Err(syntax(
                line_no,
                start + 1,
                format!("unexpected character '{}'", c as char),
            ));
        };
        out.push(Token {
            tok,
            col: start + 1,
            start,
            end: i,
        });
    }
    Ok(out)
}

struct LineParser<'a> {
    line_no: usize,
    text: &'a str,
    toks: Vec<Token>,
    i: usize,
}

impl<'a> LineParser<'a> {
    fn pos(&self) -> Pos {
        let col = self
            .toks
            .get(self.i)
            .map(|t| t.col)
            .unwrap_or(self.text.len() + 1);
        Pos {
            line: self.line_no,
            col,
        }
    }

    fn err(&self, msg: impl Into<String>) -> PresentationError {
        PresentationError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.tok)
    }

    fn at_end(&self) -> bool {
        self.i >= self.toks.len()
    }

    fn ident(&mut self, what: &str) -> Result<String, PresentationError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.i += 1;
                Ok(s)
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<u64, PresentationError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.i += 1;
                Ok(n)
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), PresentationError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn expect_end(&self) -> Result<(), PresentationError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    /// Text from the current token to the end of the line.
    fn rest(&self) -> &'a str {
        match self.toks.get(self.i) {
            Some(t) => &self.text[t.start..],
            None => "",
        }
    }
}

#[derive(Default)]
struct Builder {
    name: Option<String>,
    field: Option<Field>,
    quiver: Quiver,
    relations: Vec<RelationPoly>,
    params: Vec<(String, Fq)>,
    form: Vec<(Path, Fq)>,
}

impl Builder {
    fn name_taken(&self, name: &str) -> bool {
        name == "g"
            || self.quiver.vertex_index(name).is_some()
            || self.quiver.arrow_index(name).is_some()
            || self.params.iter().any(|(n, _)| n == name)
    }

    fn field(&self, lp: &LineParser) -> Result<Field, PresentationError> {
        self.field
            .clone()
            .ok_or_else(|| lp.err("'field' must be declared first"))
    }

    fn eval_scalar(
        &self,
        lp: &LineParser,
        text: &str,
        col: usize,
    ) -> Result<Fq, PresentationError> {
        let field = self.field(lp)?;
        let params = &self.params;
        field
            .parse_with(text, &|n| {
                params.iter().find(|(p, _)| p == n).map(|(_, v)| *v)
            })
            .map_err(|e| PresentationError::Syntax {
                pos: Pos {
                    line: lp.line_no,
                    col,
                },
                msg: e.to_string(),
            })
    }

    fn is_path_name(&self, name: &str) -> bool {
        self.quiver.arrow_index(name).is_some() || self.quiver.vertex_index(name).is_some()
    }

    fn parse_path(&self, lp: &mut LineParser) -> Result<Path, PresentationError> {
        let start_pos = lp.pos();
        let first = lp.ident("path")?;
        if let Some(v) = self.quiver.vertex_index(&first) {
            return Ok(Path::trivial(v));
        }
        let mut names = vec![first];
        while lp.peek() == Some(&Tok::Sym('.')) {
            lp.i += 1;
            names.push(lp.ident("arrow name")?);
        }
        let mut idx = Vec::with_capacity(names.len());
        for n in &names {
            match self.quiver.arrow_index(n) {
                Some(a) => idx.push(a),
                None => {
                    return Err(PresentationError::UnknownArrow {
                        pos: start_pos,
                        name: n.clone(),
                    })
                }
            }
        }
        Path::from_arrows(&self.quiver, &idx).ok_or_else(|| PresentationError::NonComposablePath {
            pos: start_pos,
            path: names.join("."),
        })
    }

    /// One coefficient factor, possibly raised to a power, evaluated in the field.
    fn parse_coeff_factor(&self, lp: &mut LineParser) -> Result<Fq, PresentationError> {
        let first = lp
            .toks
            .get(lp.i)
            .cloned()
            .ok_or_else(|| lp.err("expected term"))?;
        match &first.tok {
            Tok::Sym('(') => {
                let mut depth = 0usize;
                loop {
                    match lp.peek() {
                        Some(Tok::Sym('(')) => depth += 1,
                        Some(Tok::Sym(')')) => {
                            depth -= 1;
                            if depth == 0 {
                                lp.i += 1;
                                break;
                            }
                        }
                        None => return Err(lp.err("unbalanced parentheses")),
                        _ => {}
                    }
                    lp.i += 1;
                }
            }
            Tok::Int(_) | Tok::Ident(_) => lp.i += 1,
            _ => return Err(lp.err("expected coefficient or path")),
        }
        if lp.peek() == Some(&Tok::Sym('^')) {
            lp.i += 1;
            if lp.peek() == Some(&Tok::Sym('-')) {
                lp.i += 1;
            }
            lp.int("exponent")?;
        }
        let end = lp.toks[lp.i - 1].end;
        let text = &lp.text[first.start..end];
        self.eval_scalar(lp, text, first.col)
    }

    /// `[coeff *]* path`, or a bare scalar (which must be zero).
    fn parse_term(
        &self,
        lp: &mut LineParser,
        field: &Field,
    ) -> Result<Option<(Fq, Path)>, PresentationError> {
        let mut coeff = Fq::ONE;
        loop {
            if let Some(Tok::Ident(name)) = lp.peek() {
                if self.is_path_name(name) {
                    let path = self.parse_path(lp)?;
                    return Ok(Some((coeff, path)));
                }
            }
            let col = lp.pos().col;
            let c = self.parse_coeff_factor(lp)?;
            coeff = field.mul(coeff, c);
            if lp.peek() == Some(&Tok::Sym('*')) {
                lp.i += 1;
                continue;
            }
            if coeff.is_zero() {
                return Ok(None);
            }
            return Err(PresentationError::NonAdmissibleRelation {
                pos: Pos {
                    line: lp.line_no,
                    col,
                },
                relation: lp.text.trim().to_string(),
            });
        }
    }

    fn parse_poly(
        &self,
        lp: &mut LineParser,
        field: &Field,
        out: &mut Vec<(Fq, Path)>,
        negate: bool,
    ) -> Result<(), PresentationError> {
        let mut sign_neg = false;
        match lp.peek() {
            Some(Tok::Sym('-')) => {
                sign_neg = true;
                lp.i += 1;
            }
            Some(Tok::Sym('+')) => lp.i += 1,
            _ => {}
        }
        loop {
            if let Some((c, path)) = self.parse_term(lp, field)? {
                let c = if sign_neg != negate { field.neg(c) } else { c };
                if !c.is_zero() {
                    out.push((c, path));
                }
            }
            match lp.peek() {
                Some(Tok::Sym('+')) => {
                    sign_neg = false;
                    lp.i += 1;
                }
                Some(Tok::Sym('-')) => {
                    sign_neg = true;
                    lp.i += 1;
                }
                _ => return Ok(()),
            }
        }
    }

    fn line(&mut self, lp: &mut LineParser) -> Result<(), PresentationError> {
        let kw_pos = lp.pos();
        let kw = lp.ident("keyword")?;
        match kw.as_str() {
            "name" => {
                let n = lp.ident("name")?;
                lp.expect_end()?;
                self.name = Some(n);
            }
            "field" => {
                if self.field.is_some() {
                    return Err(syntax(kw_pos.line, kw_pos.col, "field declared twice"));
                }
                let p = lp.int("characteristic")?;
                let k = if lp.at_end() { 1 } else { lp.int("degree")? };
                lp.expect_end()?;
                let k = u32::try_from(k).map_err(|_| lp.err("degree too large"))?;
                self.field = Some(Field::new(p, k)?);
            }
            "param" => {
                let pos = lp.pos();
                let name = lp.ident("parameter name")?;
                if self.name_taken(&name) {
                    return Err(PresentationError::DuplicateName { pos, name });
                }
                lp.sym('=')?;
                let col = lp.pos().col;
                let text = lp.rest();
                let value =
                    self.eval_scalar(lp, text, col)
                        .map_err(|e| PresentationError::BadParam {
                            pos: Pos {
                                line: lp.line_no,
                                col,
                            },
                            msg: e.to_string(),
                        })?;
                self.params.push((name, value));
            }
            "vertices" => {
                if lp.at_end() {
                    return Err(lp.err("expected vertex names"));
                }
                while !lp.at_end() {
                    let pos = lp.pos();
                    let v = lp.ident("vertex name")?;
                    if self.name_taken(&v) {
                        return Err(PresentationError::DuplicateName { pos, name: v });
                    }
                    self.quiver.vertices.push(v);
                }
            }
            "arrow" => {
                let pos = lp.pos();
                let name = lp.ident("arrow name")?;
                if self.name_taken(&name) {
                    return Err(PresentationError::DuplicateName { pos, name });
                }
                lp.sym(':')?;
                let mut ends = [0usize; 2];
                for (i, end) in ends.iter_mut().enumerate() {
                    if i == 1 {
                        if lp.peek() != Some(&Tok::To) {
                            return Err(lp.err("expected '->'"));
                        }
                        lp.i += 1;
                    }
                    let vpos = lp.pos();
                    let v = lp.ident("vertex name")?;
                    *end = self
                        .quiver
                        .vertex_index(&v)
                        .ok_or(PresentationError::UnknownVertex { pos: vpos, name: v })?;
                }
                lp.expect_end()?;
                self.quiver.arrows.push(Arrow {
                    name,
                    source: ends[0],
                    target: ends[1],
                });
            }
            "rel" => {
                let field = self.field(lp)?;
                let mut terms = Vec::new();
                self.parse_poly(lp, &field, &mut terms, false)?;
                if lp.peek() == Some(&Tok::Sym('=')) {
                    lp.i += 1;
                    self.parse_poly(lp, &field, &mut terms, true)?;
                }
                lp.expect_end()?;
                let relation = lp.text.trim().to_string();
                if terms.is_empty() {
                    return Err(syntax(kw_pos.line, kw_pos.col, "relation has no terms"));
                }
                let first = terms[0].1.clone();
                if terms.iter().any(|(_, p)| !p.is_parallel(&first)) {
                    return Err(PresentationError::NonParallelRelation {
                        pos: kw_pos,
                        relation,
                    });
                }
                if terms.iter().any(|(_, p)| p.len() < 2) {
                    return Err(PresentationError::NonAdmissibleRelation {
                        pos: kw_pos,
                        relation,
                    });
                }
                self.relations.push(RelationPoly { terms });
            }
            "form" => {
                let path = self.parse_path(lp)?;
                lp.sym('=')?;
                let col = lp.pos().col;
                let text = lp.rest();
                let value = self.eval_scalar(lp, text, col)?;
                self.form.push((path, value));
            }
            other => {
                return Err(syntax(
                    kw_pos.line,
                    kw_pos.col,
                    format!("unknown keyword '{other}'"),
                ))
            }
        }
        Ok(())
    }
}

/// Parses and validates a presentation.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut b = Builder::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let toks = tokenize(line_no, line)?;
        if toks.is_empty() {
            continue;
        }
        let mut lp = LineParser {
            line_no,
            text: line,
            toks,
            i: 0,
        };
        b.line(&mut lp)?;
    }
    let field = b
        .field
        .ok_or_else(|| syntax(1, 1, "missing 'field' line"))?;
    let p = Presentation {
        name: b.name,
        field,
        quiver: b.quiver,
        relations: b.relations,
        params: b.params,
        form: b.form,
    };
    validate_presentation(&p)?;
    Ok(p)
}

/// Canonical DSL text; `parse_presentation` inverts it.
pub fn format_presentation(p: &Presentation) -> String {
    let f = &p.field;
    let q = &p.quiver;
    let mut out = String::new();
    if let Some(n) = &p.name {
        out.push_str(&format!("name {n}\n"));
    }
    out.push_str(&format!("field {} {}\n", f.p(), f.k()));
    for (n, v) in &p.params {
        out.push_str(&format!("param {n} = {}\n", f.format(*v)));
    }
    out.push_str(&format!("vertices {}\n", q.vertices.join(" ")));
    for a in &q.arrows {
        out.push_str(&format!(
            "arrow {}: {} -> {}\n",
            a.name, q.vertices[a.source], q.vertices[a.target]
        ));
    }
    for r in &p.relations {
        out.push_str(&format!("rel {}\n", r.format(f, q)));
    }
    for (path, v) in &p.form {
        out.push_str(&format!(
            "form {} = {}\n",
            q.format_path(path),
            format_coeff(f, *v)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const LOCAL: &str = "field 2\nvertices v\narrow x: v -> v\nrel x.x\n";

    #[test]
    fn local_algebra_input() {
        let p = parse_presentation(LOCAL).unwrap();
        assert_eq!(p.quiver.num_vertices(), 1);
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.field.order(), 2);
    }

    #[test]
    fn equations_and_coefficients() {
        let src = "field 2 2\nparam lambda = g\nvertices a b\n\
                   arrow x: a -> b\narrow y: b -> a\narrow z: a -> a\n\
                   rel lambda * z.z = x.y + z.z.z\n\
                   rel (g+1)^-1*2*x.y.x - x # comment\n";
        // second relation has a length-1 term
        let err = parse_presentation(src).unwrap_err();
        assert!(matches!(
            err,
            PresentationError::NonAdmissibleRelation { pos, .. } if pos.line == 8
        ));
        let src = src.replace(" - x # comment", " - z.x.y.x");
        let p = parse_presentation(&src).unwrap();
        let f = &p.field;
        let g = f.generator();
        let r0 = &p.relations[0].terms;
        assert_eq!(r0.len(), 3);
        assert_eq!(r0[0].0, g);
        assert_eq!(r0[1].0, Fq::ONE); // -1 = 1 in char 2
                                      // 2 = 0 in characteristic 2, so only the z.x.y.x term survives
        assert_eq!(p.relations[1].terms.len(), 1);
        assert_eq!(p.quiver.format_path(&p.relations[1].terms[0].1), "z.x.y.x");
    }

    #[test]
    fn error_positions() {
        let err = parse_presentation("field 2\nvertices a\narrow x: a -> b\n").unwrap_err();
        assert_eq!(
            err,
            PresentationError::UnknownVertex {
                pos: Pos { line: 3, col: 15 },
                name: "b".into()
            }
        );
        let err = parse_presentation(
            "field 2\nvertices a b\narrow x: a -> b\narrow y: b -> a\nrel x.x\n",
        )
        .unwrap_err();
        assert!(
            matches!(err, PresentationError::NonComposablePath { pos, .. } if pos == Pos { line: 5, col: 5 })
        );
        let err = parse_presentation(
            "field 2\nvertices a b\narrow x: a -> b\narrow y: b -> a\nrel x.y + y.x\n",
        )
        .unwrap_err();
        assert!(matches!(err, PresentationError::NonParallelRelation { .. }));
        let err =
            parse_presentation("field 2\nvertices a\narrow x: a -> a\nrel x.q\n").unwrap_err();
        assert!(matches!(err, PresentationError::UnknownArrow { .. }));
        let err = parse_presentation("field 2\nvertices a a\n").unwrap_err();
        assert!(matches!(err, PresentationError::DuplicateName { .. }));
        let err = parse_presentation("vertices a\n").unwrap_err();
        assert!(matches!(err, PresentationError::Syntax { .. }));
        let err = parse_presentation("field 2\nparam mu = h\n").unwrap_err();
        assert!(matches!(err, PresentationError::BadParam { .. }));
        let err = parse_presentation("field 2\nfrobnicate\n").unwrap_err();
        assert!(matches!(err, PresentationError::Syntax { pos, .. } if pos.line == 2));
        let err = parse_presentation("field 6\n").unwrap_err();
        assert!(matches!(err, PresentationError::Field(_)));
        let err = parse_presentation("field 2\n").unwrap_err();
        assert_eq!(err, PresentationError::EmptyQuiver);
    }

    #[test]
    fn form_lines() {
        let src = "field 3\nvertices v\narrow x: v -> v\nrel x.x.x\nform x.x = 2\nform v = 0\n";
        let p = parse_presentation(src).unwrap();
        assert_eq!(p.form.len(), 2);
        assert_eq!(p.form[0].1, Fq(2));
        assert!(p.form[1].0.is_trivial());
        assert_eq!(parse_presentation(&format_presentation(&p)).unwrap(), p);
    }

    fn arb_presentation() -> impl Strategy<Value = String> {
        // random relations on a two-vertex quiver with loops
        let coeff = prop::sample::select(vec!["", "2*", "g*", "(g+1)*", "lambda*", "2*g^2*"]);
        let path = prop::sample::select(vec![
            "a.a", "a.x.y", "x.y", "x.b.y", "a.a.a", "x.y.a", "a.x.b.y",
        ]);
        let sign = prop::sample::select(vec![" + ", " - "]);
        prop::collection::vec(prop::collection::vec((coeff, path, sign), 1..4), 1..4).prop_map(
            |rels| {
                let mut s = String::from(
                    "name Rand\nfield 3 3\nparam lambda = g+2\nvertices u w\n\
                 arrow a: u -> u\narrow x: u -> w\narrow b: w -> w\narrow y: w -> u\n",
                );
                for rel in rels {
                    s.push_str("rel ");
                    for (i, (c, p, sgn)) in rel.iter().enumerate() {
                        if i > 0 {
                            s.push_str(sgn);
                        }
                        s.push_str(c);
                        s.push_str(p);
                    }
                    s.push('\n');
                }
                s.push_str("form a.a = lambda^-1\n");
                s
            },
        )
    }

    proptest! {
        #[test]
        fn parse_format_round_trip(src in arb_presentation()) {
            let p = match parse_presentation(&src) {
                Ok(p) => p,
                // cancellation can empty a relation
                Err(PresentationError::Syntax { .. }) => return Ok(()),
                Err(e) => panic!("{e}"),
            };
            let text = format_presentation(&p);
            let q = parse_presentation(&text).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(format_presentation(&q), text);
        }
    }
}
