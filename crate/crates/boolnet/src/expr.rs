//! Boolean expression grammar: parsing, rendering, evaluation, length
//! measures, top-level decomposition, and bounded enumeration of all
//! well-formed expressions up to a coded length.
//!
//! Variables are always written in coded form: the mark `x` followed by
//! the index in unary (`x11111` is variable 5). This keeps the alphabet
//! finite at seven symbols.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

pub const VAR_MARK: char = 'x';
pub const DIGIT_MARK: char = '1';
pub const NOT_SYM: char = '¬';
pub const OR_SYM: char = '∨';
pub const AND_SYM: char = '∧';
pub const LPAREN: char = '(';
pub const RPAREN: char = ')';

/// The fixed seven-symbol alphabet every rendered expression draws from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn standard() -> Self {
        Alphabet {
            symbols: vec![
                VAR_MARK, DIGIT_MARK, NOT_SYM, OR_SYM, AND_SYM, LPAREN, RPAREN,
            ],
        }
    }

    /// Number of symbols, the fan-out of one switching element.
    pub fn m(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn contains(&self, c: char) -> bool {
        self.symbols.contains(&c)
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::standard()
    }
}

/// Abstract syntax tree of a Boolean expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Var(u32),
    Not(Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    And(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn var(index: u32) -> Expr {
        assert!(index >= 1, "variable indices start at 1");
        Expr::Var(index)
    }

    pub fn not(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn or(l: Expr, r: Expr) -> Expr {
        Expr::Or(Box::new(l), Box::new(r))
    }

    pub fn and(l: Expr, r: Expr) -> Expr {
        Expr::And(Box::new(l), Box::new(r))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

/// Total map from variable index to truth bit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TruthAssignment {
    bits: BTreeMap<u32, bool>,
}

impl TruthAssignment {
    pub fn new() -> Self {
        TruthAssignment::default()
    }

    pub fn set(&mut self, var: u32, bit: bool) {
        self.bits.insert(var, bit);
    }

    pub fn get(&self, var: u32) -> Option<bool> {
        self.bits.get(&var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        self.bits.iter().map(|(v, b)| (*v, *b))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

impl FromIterator<(u32, bool)> for TruthAssignment {
    fn from_iter<T: IntoIterator<Item = (u32, bool)>>(iter: T) -> Self {
        TruthAssignment {
            bits: iter.into_iter().collect(),
        }
    }
}

/// The length notions of an expression: plain symbols, variable
/// occurrences, distinct variables, or symbols of the unary-coded string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthMeasure {
    SymbolCount,
    VariableOccurrences,
    DistinctVariables,
    CodedSymbolCount,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    /// 1-based symbol position of the offending input.
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("no truth value assigned for variable x{0}")]
    MissingVariable(u32),
}

fn canonical_symbol(c: char) -> char {
    match c {
        '!' => NOT_SYM,
        '|' => OR_SYM,
        '&' => AND_SYM,
        other => other,
    }
}

/// Normalize ASCII operator aliases and split into symbols.
fn lex(text: &str) -> Result<Vec<char>, ParseError> {
    let alphabet = Alphabet::standard();
    let mut out = Vec::new();
    for (i, c) in text.chars().enumerate() {
        let c = canonical_symbol(c);
        if !alphabet.contains(c) {
            return Err(ParseError {
                pos: i + 1,
                msg: format!("symbol '{c}' is not in the alphabet"),
            });
        }
        out.push(c);
    }
    Ok(out)
}

struct Parser {
    toks: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos + 1,
            msg: msg.into(),
        }
    }

    // expr := term (∨ term)*   left-associative
    fn parse_or(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_and()?;
        while self.peek() == Some(OR_SYM) {
            self.bump();
            let rhs = self.parse_and()?;
            acc = Expr::or(acc, rhs);
        }
        Ok(acc)
    }

    // term := factor (∧ factor)*   left-associative
    fn parse_and(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(AND_SYM) {
            self.bump();
            let rhs = self.parse_factor()?;
            acc = Expr::and(acc, rhs);
        }
        Ok(acc)
    }

    // factor := ¬ factor | ( expr ) | variable
    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(NOT_SYM) => {
                self.bump();
                Ok(Expr::not(self.parse_factor()?))
            }
            Some(LPAREN) => {
                self.bump();
                let inner = self.parse_or()?;
                if self.bump() != Some(RPAREN) {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(VAR_MARK) => {
                self.bump();
                let mut index: u32 = 0;
                while self.peek() == Some(DIGIT_MARK) {
                    self.bump();
                    index += 1;
                }
                if index == 0 {
                    return Err(self.err("variable mark 'x' without unary digits"));
                }
                Ok(Expr::var(index))
            }
            Some(c) => Err(self.err(format!("unexpected symbol '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse an expression under precedence ¬ > ∧ > ∨ with left-associative
/// binary chains. ASCII aliases `!` `|` `&` are accepted on input.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    if text.is_empty() {
        return Err(ParseError {
            pos: 1,
            msg: "empty input".into(),
        });
    }
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.parse_or()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after expression"));
    }
    Ok(e)
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Or(..) => 0,
        Expr::And(..) => 1,
        Expr::Not(_) => 2,
        Expr::Var(_) => 3,
    }
}

fn render_into(e: &Expr, out: &mut String) {
    match e {
        Expr::Var(i) => {
            out.push(VAR_MARK);
            for _ in 0..*i {
                out.push(DIGIT_MARK);
            }
        }
        Expr::Not(c) => {
            out.push(NOT_SYM);
            if prec(c) < 2 {
                out.push(LPAREN);
                render_into(c, out);
                out.push(RPAREN);
            } else {
                render_into(c, out);
            }
        }
        Expr::Or(l, r) => render_binary(l, r, OR_SYM, 0, out),
        Expr::And(l, r) => render_binary(l, r, AND_SYM, 1, out),
    }
}

fn render_binary(l: &Expr, r: &Expr, op: char, level: u8, out: &mut String) {
    // Left child at equal precedence stays bare (left-associative chains);
    // right child at equal precedence needs parentheses.
    if prec(l) < level {
        out.push(LPAREN);
        render_into(l, out);
        out.push(RPAREN);
    } else {
        render_into(l, out);
    }
    out.push(op);
    if prec(r) <= level {
        out.push(LPAREN);
        render_into(r, out);
        out.push(RPAREN);
    } else {
        render_into(r, out);
    }
}

/// Render with canonical symbols, emitting parentheses only where
/// precedence requires. `parse(render(e))` reproduces `e`.
pub fn render(e: &Expr) -> String {
    let mut s = String::new();
    render_into(e, &mut s);
    s
}

pub fn evaluate(e: &Expr, t: &TruthAssignment) -> Result<bool, EvalError> {
    match e {
        Expr::Var(i) => t.get(*i).ok_or(EvalError::MissingVariable(*i)),
        Expr::Not(c) => Ok(!evaluate(c, t)?),
        Expr::Or(l, r) => Ok(evaluate(l, t)? | evaluate(r, t)?),
        Expr::And(l, r) => Ok(evaluate(l, t)? & evaluate(r, t)?),
    }
}

/// Strictly increasing list of the distinct variable indices in `e`.
pub fn variables(e: &Expr) -> Vec<u32> {
    let mut set = BTreeSet::new();
    collect_vars(e, &mut set);
    set.into_iter().collect()
}

fn collect_vars(e: &Expr, set: &mut BTreeSet<u32>) {
    match e {
        Expr::Var(i) => {
            set.insert(*i);
        }
        Expr::Not(c) => collect_vars(c, set),
        Expr::Or(l, r) | Expr::And(l, r) => {
            collect_vars(l, set);
            collect_vars(r, set);
        }
    }
}

fn occurrences(e: &Expr) -> u64 {
    match e {
        Expr::Var(_) => 1,
        Expr::Not(c) => occurrences(c),
        Expr::Or(l, r) | Expr::And(l, r) => occurrences(l) + occurrences(r),
    }
}

pub fn length(e: &Expr, measure: LengthMeasure) -> u64 {
    match measure {
        LengthMeasure::VariableOccurrences => occurrences(e),
        LengthMeasure::DistinctVariables => variables(e).len() as u64,
        LengthMeasure::CodedSymbolCount => render(e).chars().count() as u64,
        LengthMeasure::SymbolCount => {
            // Every '1' belongs to a variable coding; dropping them counts
            // each variable as a single symbol.
            render(e).chars().filter(|c| *c != DIGIT_MARK).count() as u64
        }
    }
}

/// Symbol count of an expression string (unary-coded length).
pub fn coded_len(s: &str) -> usize {
    s.chars().count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Or,
    And,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Or => OR_SYM,
            BinOp::And => AND_SYM,
        }
    }
}

/// Result of splitting an expression at its top-level connective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// A single variable; nothing to split.
    Base,
    Negation(String),
    Binary(BinOp, String, String),
}

fn matching_close(s: &[char], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.iter().enumerate().skip(open) {
        match c {
            &LPAREN => depth += 1,
            &RPAREN => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn fully_wrapped(s: &[char]) -> bool {
    s.len() >= 2 && s[0] == LPAREN && matching_close(s, 0) == Some(s.len() - 1)
}

/// Remove at most one layer of wrapping parentheses.
fn strip_one_wrap(s: &[char]) -> String {
    if fully_wrapped(s) {
        s[1..s.len() - 1].iter().collect()
    } else {
        s.iter().collect()
    }
}

/// Position of the last depth-zero occurrence of `op`; the top node of a
/// left-associative chain sits at the last operator.
fn last_top_level(s: &[char], op: char) -> Option<usize> {
    let mut depth = 0i32;
    let mut found = None;
    for (i, c) in s.iter().enumerate() {
        match *c {
            LPAREN => depth += 1,
            RPAREN => depth -= 1,
            c if c == op && depth == 0 => found = Some(i),
            _ => {}
        }
    }
    found
}

/// Split a well-formed expression at its top-level connective, stripping
/// one layer of wrapping parentheses from each component.
pub fn decompose(text: &str) -> Result<Decomposition, ParseError> {
    parse(text)?;
    let chars = lex(text)?;
    let mut s: &[char] = &chars;
    // Tolerate redundant wrapping of the whole input.
    while fully_wrapped(s) {
        s = &s[1..s.len() - 1];
    }
    for (op_sym, op) in [(OR_SYM, BinOp::Or), (AND_SYM, BinOp::And)] {
        if let Some(i) = last_top_level(s, op_sym) {
            return Ok(Decomposition::Binary(
                op,
                strip_one_wrap(&s[..i]),
                strip_one_wrap(&s[i + 1..]),
            ));
        }
    }
    if s.first() == Some(&NOT_SYM) {
        return Ok(Decomposition::Negation(strip_one_wrap(&s[1..])));
    }
    Ok(Decomposition::Base)
}

/// Top-level shape of an expression string, used to decide where the
/// parenthesized production forms are non-redundant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TopKind {
    Atom,
    Neg,
    Or,
    And,
}

#[derive(Debug, Clone)]
pub struct EnumConfig {
    /// Also generate production forms whose parentheses do not change the
    /// parse, e.g. `(x1)∨(x1)` and `¬(x1)`.
    pub include_redundant_parens: bool,
    /// Abort enumeration after this many emitted expressions.
    pub max_items: Option<u64>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            include_redundant_parens: false,
            max_items: None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration budget exceeded after {emitted} expressions (cap {cap})")]
    BudgetExceeded { emitted: u64, cap: u64 },
    #[error("enumeration requires k >= 1 and max_len >= 2 (got k={k}, max_len={max_len})")]
    BadBounds { k: u32, max_len: usize },
}

/// All well-formed expression strings over `x1..xk` with coded length up
/// to `max_len`, grouped by length. Index `l` of the result holds the
/// strings of length exactly `l`, each sorted and deduplicated.
pub fn enumerate_by_length(
    k: u32,
    max_len: usize,
    cfg: &EnumConfig,
) -> Result<Vec<Vec<String>>, EnumError> {
    if k < 1 || max_len < 2 {
        return Err(EnumError::BadBounds { k, max_len });
    }
    let mut buckets: Vec<Vec<(String, TopKind)>> = vec![Vec::new(); max_len + 1];
    let mut emitted: u64 = 0;
    for len in 2..=max_len {
        let mut seen: HashSet<String> = HashSet::new();
        let mut bucket: Vec<(String, TopKind)> = Vec::new();
        let mut push = |s: String, kind: TopKind, bucket: &mut Vec<(String, TopKind)>| {
            if seen.insert(s.clone()) {
                bucket.push((s, kind));
            }
        };

        // Variable of coded length `len`.
        let index = (len - 1) as u32;
        if index <= k {
            let mut v = String::from(VAR_MARK);
            for _ in 0..index {
                v.push(DIGIT_MARK);
            }
            push(v, TopKind::Atom, &mut bucket);
        }

        // ¬A
        if len >= 3 {
            for (a, kind) in buckets[len - 1].clone() {
                let top = match kind {
                    TopKind::Or => TopKind::Or,
                    TopKind::And => TopKind::And,
                    _ => TopKind::Neg,
                };
                push(format!("{NOT_SYM}{a}"), top, &mut bucket);
            }
        }

        // ¬(A) — non-redundant only when A has a top-level binary operator.
        if len >= 5 {
            for (a, kind) in buckets[len - 3].clone() {
                if cfg.include_redundant_parens || matches!(kind, TopKind::Or | TopKind::And) {
                    push(
                        format!("{NOT_SYM}{LPAREN}{a}{RPAREN}"),
                        TopKind::Neg,
                        &mut bucket,
                    );
                }
            }
        }

        // A∨B and A∧B
        if len >= 5 {
            for la in 2..=len - 3 {
                let lb = len - 1 - la;
                for (a, ka) in buckets[la].clone() {
                    for (b, kb) in buckets[lb].clone() {
                        push(format!("{a}{OR_SYM}{b}"), TopKind::Or, &mut bucket);
                        // The concatenation has a depth-zero ∨ when either
                        // side does, and that ∨ then outranks the new ∧.
                        let and_top = if matches!(ka, TopKind::Or) || matches!(kb, TopKind::Or) {
                            TopKind::Or
                        } else {
                            TopKind::And
                        };
                        push(format!("{a}{AND_SYM}{b}"), and_top, &mut bucket);
                    }
                }
            }
        }

        // (A)∨(B) and (A)∧(B) — kept only where the plain form would parse
        // to a different tree.
        if len >= 9 {
            for la in 2..=len - 7 {
                let lb = len - 5 - la;
                for (a, ka) in buckets[la].clone() {
                    for (b, kb) in buckets[lb].clone() {
                        let or_needed = matches!(kb, TopKind::Or);
                        if cfg.include_redundant_parens || or_needed {
                            push(
                                format!("{LPAREN}{a}{RPAREN}{OR_SYM}{LPAREN}{b}{RPAREN}"),
                                TopKind::Or,
                                &mut bucket,
                            );
                        }
                        let and_needed = matches!(ka, TopKind::Or)
                            || matches!(kb, TopKind::Or | TopKind::And);
                        if cfg.include_redundant_parens || and_needed {
                            push(
                                format!("{LPAREN}{a}{RPAREN}{AND_SYM}{LPAREN}{b}{RPAREN}"),
                                TopKind::And,
                                &mut bucket,
                            );
                        }
                    }
                }
            }
        }

        bucket.sort_by(|a, b| a.0.cmp(&b.0));
        emitted += bucket.len() as u64;
        if let Some(cap) = cfg.max_items {
            if emitted > cap {
                return Err(EnumError::BudgetExceeded { emitted, cap });
            }
        }
        buckets[len] = bucket;
    }
    Ok(buckets
        .into_iter()
        .map(|b| b.into_iter().map(|(s, _)| s).collect())
        .collect())
}

/// Flat stream of all expressions with coded length up to `max_len`, in
/// nondecreasing length order.
pub fn enumerate_expressions(
    k: u32,
    max_len: usize,
    cfg: &EnumConfig,
) -> Result<Vec<String>, EnumError> {
    Ok(enumerate_by_length(k, max_len, cfg)?
        .into_iter()
        .flatten()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(pairs: &[(u32, bool)]) -> TruthAssignment {
        pairs.iter().copied().collect()
    }

    #[test]
    fn parse_paper_example() {
        assert_eq!(
            parse("x1∨¬x1").unwrap(),
            Expr::or(Expr::var(1), Expr::not(Expr::var(1)))
        );
        assert_eq!(parse("x1").unwrap(), Expr::var(1));
    }

    #[test]
    fn parse_ascii_aliases() {
        assert_eq!(parse("x1|!x1").unwrap(), parse("x1∨¬x1").unwrap());
        assert_eq!(parse("x1&x11").unwrap(), parse("x1∧x11").unwrap());
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse("∧x1").unwrap_err();
        assert_eq!(err.pos, 1);
        assert!(parse("").is_err());
        assert!(parse("x1∨").is_err());
        assert!(parse("(x1").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn render_minimal_parens() {
        assert_eq!(
            render(&Expr::or(Expr::var(1), Expr::not(Expr::var(1)))),
            "x1∨¬x1"
        );
        assert_eq!(
            render(&Expr::and(Expr::or(Expr::var(1), Expr::var(2)), Expr::var(3))),
            "(x1∨x11)∧x111"
        );
        assert_eq!(render(&Expr::var(5)), "x11111");
    }

    #[test]
    fn render_right_assoc_needs_parens() {
        let e = Expr::and(Expr::var(1), Expr::and(Expr::var(1), Expr::var(1)));
        assert_eq!(render(&e), "x1∧(x1∧x1)");
        assert_eq!(parse(&render(&e)).unwrap(), e);
    }

    // §2 example with the alphabetical index map u=1, w=2, x=3, y=4, z=5.
    fn section2_expr() -> Expr {
        parse("x111∧¬x111∧x11111∧¬x1111∧x1111∨x1∧¬x111∧x11111∧¬x1111∧x11").unwrap()
    }

    #[test]
    fn evaluate_section2_example() {
        let e = section2_expr();
        let assign = t(&[(1, true), (3, false), (5, true), (4, false), (2, true)]);
        assert_eq!(evaluate(&e, &assign).unwrap(), true);
    }

    #[test]
    fn evaluate_basics() {
        assert_eq!(evaluate(&Expr::var(1), &t(&[(1, false)])).unwrap(), false);
        let contra = Expr::and(Expr::var(1), Expr::not(Expr::var(1)));
        assert_eq!(evaluate(&contra, &t(&[(1, false)])).unwrap(), false);
        assert_eq!(evaluate(&contra, &t(&[(1, true)])).unwrap(), false);
        assert_eq!(
            evaluate(&Expr::var(2), &t(&[(1, true)])).unwrap_err(),
            EvalError::MissingVariable(2)
        );
    }

    #[test]
    fn variables_sorted_distinct() {
        assert_eq!(variables(&Expr::or(Expr::var(3), Expr::var(1))), vec![1, 3]);
        assert_eq!(variables(&Expr::var(2)), vec![2]);
        assert_eq!(variables(&section2_expr()), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn length_measures() {
        let contra = Expr::and(Expr::var(1), Expr::not(Expr::var(1)));
        assert_eq!(length(&contra, LengthMeasure::DistinctVariables), 1);
        assert_eq!(length(&contra, LengthMeasure::VariableOccurrences), 2);
        assert_eq!(length(&contra, LengthMeasure::SymbolCount), 4);
        assert_eq!(length(&Expr::var(5), LengthMeasure::CodedSymbolCount), 6);
    }

    #[test]
    fn decompose_forms() {
        assert_eq!(
            decompose("¬(x1∨x11)").unwrap(),
            Decomposition::Negation("x1∨x11".into())
        );
        assert_eq!(
            decompose("x1∨x11∧x111").unwrap(),
            Decomposition::Binary(BinOp::Or, "x1".into(), "x11∧x111".into())
        );
        assert_eq!(decompose("x1").unwrap(), Decomposition::Base);
        assert_eq!(
            decompose("(x1∨x11)∧(x1)").unwrap(),
            Decomposition::Binary(BinOp::And, "x1∨x11".into(), "x1".into())
        );
        assert_eq!(
            decompose("¬¬x1").unwrap(),
            Decomposition::Negation("¬x1".into())
        );
    }

    #[test]
    fn decompose_splits_left_assoc_chain_at_last_operator() {
        assert_eq!(
            decompose("x1∨x1∨x1").unwrap(),
            Decomposition::Binary(BinOp::Or, "x1∨x1".into(), "x1".into())
        );
    }

    #[test]
    fn decompose_components_evaluate_equivalent() {
        let text = "x1∨x11∧x111";
        let whole = parse(text).unwrap();
        let Decomposition::Binary(op, l, r) = decompose(text).unwrap() else {
            panic!("expected binary split");
        };
        let rebuilt = match op {
            BinOp::Or => Expr::or(parse(&l).unwrap(), parse(&r).unwrap()),
            BinOp::And => Expr::and(parse(&l).unwrap(), parse(&r).unwrap()),
        };
        for bits in 0..8u32 {
            let assign: TruthAssignment = [1u32, 2, 3]
                .iter()
                .enumerate()
                .map(|(i, v)| (*v, bits >> i & 1 == 1))
                .collect();
            assert_eq!(
                evaluate(&whole, &assign).unwrap(),
                evaluate(&rebuilt, &assign).unwrap()
            );
        }
    }

    #[test]
    fn enumerate_smallest() {
        let cfg = EnumConfig::default();
        assert_eq!(
            enumerate_expressions(1, 2, &cfg).unwrap(),
            vec!["x1".to_string()]
        );
        assert_eq!(
            enumerate_expressions(1, 3, &cfg).unwrap(),
            vec!["x1".to_string(), "¬x1".to_string()]
        );
    }

    #[test]
    fn enumerate_budget_abort() {
        let cfg = EnumConfig {
            max_items: Some(3),
            ..EnumConfig::default()
        };
        match enumerate_expressions(1, 6, &cfg) {
            Err(EnumError::BudgetExceeded { emitted, cap: 3 }) => assert!(emitted > 3),
            other => panic!("expected budget abort, got {other:?}"),
        }
    }

    #[test]
    fn enumerate_strings_parse_and_round_trip() {
        for s in enumerate_expressions(2, 7, &EnumConfig::default()).unwrap() {
            let e = parse(&s).unwrap();
            assert_eq!(parse(&render(&e)).unwrap(), e, "round trip of {s}");
        }
    }
}
