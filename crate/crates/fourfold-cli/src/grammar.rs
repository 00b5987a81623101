//! Text grammar for polynomials, in the compact style computer algebra
//! systems print (coefficients juxtaposed with variables, `*` optional):
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := coef ('*'? factor)* | factor ('*'? factor)*
//! factor := var ('^' exp)?
//! var    := name '_' digits         (e.g. x_0, t_2)
//! coef   := digits
//! ```
//!
//! `*` is optional everywhere, so `-6x_0x_1^2` and `-6*x_0*x_1^2` parse the
//! same. Printing is canonical: terms descending in the ring order,
//! coefficients as signed residues in `[-(p-1)/2, (p-1)/2]`, no `*`, unit
//! coefficients elided. `parse(print(p)) == p` for every polynomial.

use fourfold_core::poly::{Monomial, Poly, RingSpec};

/// Variable names, position = ring variable index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    pub names: Vec<String>,
}

impl VarTable {
    /// `x_0 .. x_{n-1}`-style table.
    pub fn indexed(prefix: &str, count: usize) -> VarTable {
        VarTable {
            names: (0..count).map(|i| format!("{prefix}_{i}")).collect(),
        }
    }

    /// The ambient `P^5` table `x_0..x_5`.
    pub fn ambient() -> VarTable {
        Self::indexed("x", 6)
    }

    fn lookup(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.bump();
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.col,
            message: message.into(),
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let mut val: u64 = 0;
        let mut seen = false;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                seen = true;
                val = val
                    .checked_mul(10)
                    .and_then(|v| v.checked_add((c - b'0') as u64))
                    .ok_or_else(|| self.error("number too large"))?;
                self.bump();
            } else {
                break;
            }
        }
        if !seen {
            return Err(self.error("expected digits"));
        }
        Ok(val)
    }

    fn identifier(&mut self) -> Result<String, ParseError> {
        let mut name = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            name.push(self.bump().expect("peeked") as char);
        }
        if name.is_empty() {
            return Err(self.error("expected a variable name"));
        }
        if self.peek() == Some(b'_') {
            name.push(self.bump().expect("peeked") as char);
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.error("expected digits after '_'"));
            }
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                name.push(self.bump().expect("peeked") as char);
            }
        }
        Ok(name)
    }
}

/// Parse a polynomial in the given ring and variable table.
pub fn parse_poly(src: &str, ring: RingSpec, vars: &VarTable) -> Result<Poly, ParseError> {
    debug_assert_eq!(vars.names.len(), ring.nvars);
    let mut sc = Scanner::new(src);
    let mut terms: Vec<(Monomial, u32)> = Vec::new();
    sc.skip_ws();
    if sc.peek().is_none() {
        return Err(sc.error("empty polynomial"));
    }
    let mut sign: i64 = 1;
    if sc.peek() == Some(b'-') {
        sc.bump();
        sign = -1;
    } else if sc.peek() == Some(b'+') {
        sc.bump();
    }
    loop {
        sc.skip_ws();
        let (mono, coeff) = parse_term(&mut sc, ring, vars)?;
        let signed = sign * coeff as i64;
        terms.push((mono, ring.field().reduce_i64(signed)));
        sc.skip_ws();
        match sc.peek() {
            None => break,
            Some(b'+') => {
                sc.bump();
                sign = 1;
            }
            Some(b'-') => {
                sc.bump();
                sign = -1;
            }
            Some(c) => {
                return Err(sc.error(format!("unexpected character '{}'", c as char)));
            }
        }
    }
    Ok(Poly::from_terms(ring, terms))
}

fn parse_term(
    sc: &mut Scanner<'_>,
    ring: RingSpec,
    vars: &VarTable,
) -> Result<(Monomial, u64), ParseError> {
    let mut coeff: u64 = 1;
    let mut exps = vec![0u16; ring.nvars];
    let mut any = false;

    sc.skip_ws();
    if matches!(sc.peek(), Some(c) if c.is_ascii_digit()) {
        coeff = sc.number()?;
        any = true;
        sc.skip_ws();
        if sc.peek() == Some(b'*') {
            sc.bump();
        }
    }
    loop {
        sc.skip_ws();
        match sc.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let line = sc.line;
                let col = sc.col;
                let name = sc.identifier()?;
                let index = vars.lookup(&name).ok_or(ParseError {
                    line,
                    column: col,
                    message: format!("unknown variable '{name}'"),
                })?;
                let mut exp: u64 = 1;
                if sc.peek() == Some(b'^') {
                    sc.bump();
                    if !matches!(sc.peek(), Some(c) if c.is_ascii_digit()) {
                        return Err(sc.error("expected an exponent after '^'"));
                    }
                    exp = sc.number()?;
                }
                if exp > u16::MAX as u64 {
                    return Err(sc.error("exponent too large"));
                }
                exps[index] = exps[index]
                    .checked_add(exp as u16)
                    .ok_or_else(|| sc.error("exponent too large"))?;
                any = true;
                sc.skip_ws();
                if sc.peek() == Some(b'*') {
                    sc.bump();
                }
            }
            _ => break,
        }
    }
    if !any {
        return Err(sc.error("expected a term"));
    }
    Ok((Monomial { exps }, coeff))
}

/// Canonical printing: signed residues, descending term order, no `*`.
pub fn print_poly(p: &Poly, vars: &VarTable) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = p.ring.field();
    let mut out = String::new();
    for (i, (mono, coeff)) in p.terms.iter().enumerate() {
        let signed = field.signed(*coeff);
        let (sign_str, magnitude) = if signed < 0 {
            ("-", (-signed) as u64)
        } else {
            ("+", signed as u64)
        };
        if i == 0 {
            if sign_str == "-" {
                out.push('-');
            }
        } else {
            out.push_str(sign_str);
        }
        let is_constant = mono.is_one();
        if magnitude != 1 || is_constant {
            out.push_str(&magnitude.to_string());
        }
        for (v, &e) in mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            out.push_str(&vars.names[v]);
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
    out
}

/// Parse a whitespace-tolerant integer matrix like `[[3,1],[1,3]]`.
pub fn parse_int_matrix(src: &str) -> Result<Vec<Vec<i64>>, ParseError> {
    let mut sc = Scanner::new(src);
    sc.skip_ws();
    if sc.bump() != Some(b'[') {
        return Err(sc.error("expected '['"));
    }
    let mut rows = Vec::new();
    loop {
        sc.skip_ws();
        match sc.peek() {
            Some(b'[') => {
                sc.bump();
                let mut row = Vec::new();
                loop {
                    sc.skip_ws();
                    let negative = if sc.peek() == Some(b'-') {
                        sc.bump();
                        true
                    } else {
                        false
                    };
                    let value = sc.number()? as i64;
                    row.push(if negative { -value } else { value });
                    sc.skip_ws();
                    match sc.bump() {
                        Some(b',') => continue,
                        Some(b']') => break,
                        _ => return Err(sc.error("expected ',' or ']' in a row")),
                    }
                }
                rows.push(row);
                sc.skip_ws();
                match sc.bump() {
                    Some(b',') => continue,
                    Some(b']') => break,
                    _ => return Err(sc.error("expected ',' or ']' after a row")),
                }
            }
            _ => return Err(sc.error("expected '[' starting a row")),
        }
    }
    Ok(rows)
}
