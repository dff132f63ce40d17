//! Trie-shaped network of switching elements with status cells, built by
//! induction on expression length. Each trie edge consumes one input
//! symbol; the node reached by spelling a hosted expression carries a
//! cell with its three-valued status and how it was resolved.

use std::collections::BTreeMap;
use std::io::{self, Read, Write};

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::expr::{
    decompose, parse, Alphabet, BinOp, Decomposition, EnumConfig, EnumError, ParseError,
};
use crate::oracle::{classify, OracleConfig, OracleError, Status};

/// How a cell's status was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolvedBy {
    BaseCase,
    NegSatRule,
    NegTautRule,
    OrSatRule,
    AndTautRule,
    OracleFallback,
    /// Audit policy only: the composition rules did not determine the status.
    Unresolved,
}

impl ResolvedBy {
    pub fn tag(self) -> &'static str {
        match self {
            ResolvedBy::BaseCase => "base",
            ResolvedBy::NegSatRule => "neg-sat",
            ResolvedBy::NegTautRule => "neg-taut",
            ResolvedBy::OrSatRule => "or-sat",
            ResolvedBy::AndTautRule => "and-taut",
            ResolvedBy::OracleFallback => "oracle",
            ResolvedBy::Unresolved => "unresolved",
        }
    }

    pub fn from_tag(tag: &str) -> Option<ResolvedBy> {
        Some(match tag {
            "base" => ResolvedBy::BaseCase,
            "neg-sat" => ResolvedBy::NegSatRule,
            "neg-taut" => ResolvedBy::NegTautRule,
            "or-sat" => ResolvedBy::OrSatRule,
            "and-taut" => ResolvedBy::AndTautRule,
            "oracle" => ResolvedBy::OracleFallback,
            "unresolved" => ResolvedBy::Unresolved,
            _ => return None,
        })
    }

    /// Resolved by one of the sound composition rules (not base, not fallback).
    pub fn is_fast_path(self) -> bool {
        matches!(
            self,
            ResolvedBy::NegSatRule
                | ResolvedBy::NegTautRule
                | ResolvedBy::OrSatRule
                | ResolvedBy::AndTautRule
        )
    }
}

/// Status cell of one hosted expression. `status` is absent exactly for
/// `Unresolved` cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub status: Option<Status>,
    pub resolved_by: ResolvedBy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connective {
    Not,
    Or,
    And,
}

/// Result of composing component statuses at a connective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Composition {
    Resolved(Status, ResolvedBy),
    Underdetermined,
}

/// Derive the status of a compound expression from its components, where
/// the component statuses force it:
///
/// - ¬D is satisfiable iff D is not a tautology; ¬D is a tautology iff D
///   is not satisfiable — both bits always resolve.
/// - D∨H is satisfiable iff either side is; an unsatisfiable side leaves
///   the compound equivalent to the other side; only a strict/strict pair
///   leaves the tautology bit open.
/// - D∧H is a tautology iff both sides are; an unsatisfiable side forces
///   unsatisfiability; a tautologous side leaves the compound equivalent
///   to the other side; only a strict/strict pair is left open.
pub fn compose_status(conn: Connective, left: Status, right: Option<Status>) -> Composition {
    use Status::*;
    match conn {
        Connective::Not => {
            let (status, rule) = match left {
                Taut => (Unsat, ResolvedBy::NegSatRule),
                Unsat => (Taut, ResolvedBy::NegTautRule),
                SatStrict => (SatStrict, ResolvedBy::NegSatRule),
            };
            Composition::Resolved(status, rule)
        }
        Connective::Or => {
            let right = right.expect("binary connective needs two statuses");
            match (left, right) {
                (Taut, _) | (_, Taut) => Composition::Resolved(Taut, ResolvedBy::OrSatRule),
                (Unsat, Unsat) => Composition::Resolved(Unsat, ResolvedBy::OrSatRule),
                (Unsat, SatStrict) | (SatStrict, Unsat) => {
                    Composition::Resolved(SatStrict, ResolvedBy::OrSatRule)
                }
                (SatStrict, SatStrict) => Composition::Underdetermined,
            }
        }
        Connective::And => {
            let right = right.expect("binary connective needs two statuses");
            match (left, right) {
                (Unsat, _) | (_, Unsat) => Composition::Resolved(Unsat, ResolvedBy::AndTautRule),
                (Taut, Taut) => Composition::Resolved(Taut, ResolvedBy::AndTautRule),
                (Taut, SatStrict) | (SatStrict, Taut) => {
                    Composition::Resolved(SatStrict, ResolvedBy::AndTautRule)
                }
                (SatStrict, SatStrict) => Composition::Underdetermined,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FallbackPolicy {
    /// Resolve underdetermined cells with the brute-force oracle.
    #[default]
    Oracle,
    /// Leave them marked `Unresolved` and report the fraction.
    Audit,
}

impl FallbackPolicy {
    pub fn name(self) -> &'static str {
        match self {
            FallbackPolicy::Oracle => "oracle",
            FallbackPolicy::Audit => "audit",
        }
    }

    pub fn from_name(s: &str) -> Option<FallbackPolicy> {
        match s {
            "oracle" => Some(FallbackPolicy::Oracle),
            "audit" => Some(FallbackPolicy::Audit),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CostModel {
    /// One step per switching element.
    #[default]
    Unit,
    /// m steps per switching element (switch built from Boolean elements).
    MUnits,
}

impl CostModel {
    pub fn name(self) -> &'static str {
        match self {
            CostModel::Unit => "unit",
            CostModel::MUnits => "m",
        }
    }

    pub fn from_name(s: &str) -> Option<CostModel> {
        match s {
            "unit" => Some(CostModel::Unit),
            "m" => Some(CostModel::MUnits),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NetworkMetrics {
    pub cells: u64,
    pub trie_nodes: u64,
    pub build_ops: u64,
    pub base_cells: u64,
    pub fast_path_cells: u64,
    pub fallback_cells: u64,
    /// Cell count per coded length.
    pub per_length: BTreeMap<usize, u64>,
}

impl NetworkMetrics {
    pub fn fast_path_fraction(&self) -> f64 {
        if self.cells == 0 {
            0.0
        } else {
            self.fast_path_cells as f64 / self.cells as f64
        }
    }
}

#[derive(Debug, Clone)]
pub struct BuildConfig {
    pub policy: FallbackPolicy,
    pub cost_model: CostModel,
    /// Abort the build once the trie exceeds this many nodes.
    pub node_budget: u64,
    pub enum_cfg: EnumConfig,
    pub oracle_cfg: OracleConfig,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            policy: FallbackPolicy::Oracle,
            cost_model: CostModel::Unit,
            node_budget: 10_000_000,
            enum_cfg: EnumConfig::default(),
            oracle_cfg: OracleConfig::default(),
        }
    }
}

#[derive(Debug, Error)]
pub enum NetError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("expression is not hosted by the network: {0}")]
    NotInNetwork(String),
    #[error("cell for '{0}' is unresolved (audit policy)")]
    UnresolvedCell(String),
    #[error("missing component cell for '{0}' during build")]
    MissingComponent(String),
    #[error("cannot save an aborted (partial) network")]
    SaveAborted,
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("network file line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("network file checksum mismatch")]
    Checksum,
}

#[derive(Debug, Clone, Default)]
struct TrieNode {
    children: BTreeMap<char, u32>,
    cell: Option<Cell>,
}

/// The built network: a trie over the seven-symbol alphabet whose cells
/// cover every production-generated expression up to the frontier length.
#[derive(Debug, Clone)]
pub struct Network {
    nodes: Vec<TrieNode>,
    /// Hosted expressions in build order (by length, then lexicographic).
    entries: Vec<String>,
    alphabet: Alphabet,
    variable_count: u32,
    frontier: usize,
    policy: FallbackPolicy,
    cost_model: CostModel,
    metrics: NetworkMetrics,
    aborted: bool,
}

impl Network {
    pub fn variable_count(&self) -> u32 {
        self.variable_count
    }

    pub fn frontier(&self) -> usize {
        self.frontier
    }

    pub fn policy(&self) -> FallbackPolicy {
        self.policy
    }

    pub fn cost_model(&self) -> CostModel {
        self.cost_model
    }

    pub fn aborted(&self) -> bool {
        self.aborted
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn metrics(&self) -> &NetworkMetrics {
        &self.metrics
    }

    fn empty(
        k: u32,
        n: usize,
        policy: FallbackPolicy,
        cost_model: CostModel,
    ) -> Network {
        Network {
            nodes: vec![TrieNode::default()],
            entries: Vec::new(),
            alphabet: Alphabet::standard(),
            variable_count: k,
            frontier: n,
            policy,
            cost_model,
            metrics: NetworkMetrics::default(),
            aborted: false,
        }
    }

    fn insert_path(&mut self, symbols: &[char]) -> u32 {
        let mut node = 0u32;
        for &c in symbols {
            node = match self.nodes[node as usize].children.get(&c) {
                Some(&next) => next,
                None => {
                    let next = self.nodes.len() as u32;
                    self.nodes.push(TrieNode::default());
                    self.nodes[node as usize].children.insert(c, next);
                    next
                }
            };
        }
        node
    }

    fn walk(&self, symbols: &[char]) -> Option<u32> {
        let mut node = 0u32;
        for c in symbols {
            node = *self.nodes[node as usize].children.get(c)?;
        }
        Some(node)
    }

    fn set_cell(&mut self, text: &str, cell: Cell) {
        let symbols: Vec<char> = text.chars().collect();
        let node = self.insert_path(&symbols);
        debug_assert!(self.nodes[node as usize].cell.is_none());
        self.nodes[node as usize].cell = Some(cell);
        self.entries.push(text.to_string());
        self.metrics.cells += 1;
        *self.metrics.per_length.entry(symbols.len()).or_insert(0) += 1;
        match cell.resolved_by {
            ResolvedBy::BaseCase => self.metrics.base_cells += 1,
            r if r.is_fast_path() => self.metrics.fast_path_cells += 1,
            _ => self.metrics.fallback_cells += 1,
        }
        self.metrics.trie_nodes = self.nodes.len() as u64;
    }

    fn cell_of(&self, text: &str) -> Option<&Cell> {
        let symbols: Vec<char> = text.chars().collect();
        let node = self.walk(&symbols)?;
        self.nodes[node as usize].cell.as_ref()
    }

    /// Hosted expressions with their cells, in build order.
    pub fn hosted(&self) -> impl Iterator<Item = (&str, &Cell)> {
        self.entries.iter().map(move |s| {
            let cell = self.cell_of(s).expect("entry has a cell");
            (s.as_str(), cell)
        })
    }

    /// Walk one trie edge per input symbol and read the status cell.
    /// Steps are the symbol count, or m times it under the m-unit model.
    pub fn query(&self, text: &str) -> Result<(Status, u64), NetError> {
        // Accept ASCII aliases the same way the parser does.
        let canonical: String = text
            .chars()
            .map(|c| match c {
                '!' => '¬',
                '|' => '∨',
                '&' => '∧',
                other => other,
            })
            .collect();
        let symbols: Vec<char> = canonical.chars().collect();
        if symbols.len() > self.frontier {
            return Err(NetError::NotInNetwork(text.to_string()));
        }
        let node = self
            .walk(&symbols)
            .ok_or_else(|| NetError::NotInNetwork(text.to_string()))?;
        let cell = self.nodes[node as usize]
            .cell
            .as_ref()
            .ok_or_else(|| NetError::NotInNetwork(text.to_string()))?;
        let status = cell
            .status
            .ok_or_else(|| NetError::UnresolvedCell(text.to_string()))?;
        let per_switch = match self.cost_model {
            CostModel::Unit => 1,
            CostModel::MUnits => self.alphabet.m() as u64,
        };
        Ok((status, symbols.len() as u64 * per_switch))
    }

    /// Fraction of unresolved cells per coded length (audit policy).
    pub fn unresolved_fraction_by_length(&self) -> BTreeMap<usize, f64> {
        let mut unresolved: BTreeMap<usize, u64> = BTreeMap::new();
        for (text, cell) in self.hosted() {
            if cell.resolved_by == ResolvedBy::Unresolved {
                *unresolved.entry(text.chars().count()).or_insert(0) += 1;
            }
        }
        self.metrics
            .per_length
            .iter()
            .map(|(&len, &total)| {
                let u = unresolved.get(&len).copied().unwrap_or(0);
                (len, u as f64 / total as f64)
            })
            .collect()
    }
}

/// Build the network for `k` variables up to frontier length `n`,
/// length by length so every component cell exists before it is read.
pub fn build(k: u32, n: usize, cfg: &BuildConfig) -> Result<Network, NetError> {
    let buckets = crate::expr::enumerate_by_length(k, n, &cfg.enum_cfg)?;
    let mut net = Network::empty(k, n, cfg.policy, cfg.cost_model);
    for bucket in &buckets {
        for text in bucket {
            if net.nodes.len() as u64 + text.chars().count() as u64 > cfg.node_budget {
                net.aborted = true;
                return Ok(net);
            }
            let cell = resolve_cell(&net, text, cfg)?;
            match cell.resolved_by {
                // Checking one variable for SAT and TAU takes two steps.
                ResolvedBy::BaseCase => net.metrics.build_ops += 2,
                _ => net.metrics.build_ops += 1,
            }
            net.set_cell(text, cell);
        }
    }
    Ok(net)
}

fn component_status(
    net: &Network,
    text: &str,
    cfg: &BuildConfig,
) -> Result<Option<Status>, NetError> {
    match net.cell_of(text) {
        Some(cell) => Ok(cell.status),
        // With redundant parens hosted, splits can name mixed forms like
        // "(x1)∧x1" that no production generates; those go to the fallback.
        None if cfg.enum_cfg.include_redundant_parens => Ok(None),
        None => Err(NetError::MissingComponent(text.to_string())),
    }
}

fn resolve_cell(net: &Network, text: &str, cfg: &BuildConfig) -> Result<Cell, NetError> {
    let composition = match decompose(text)? {
        Decomposition::Base => {
            return Ok(Cell {
                status: Some(Status::SatStrict),
                resolved_by: ResolvedBy::BaseCase,
            })
        }
        Decomposition::Negation(body) => match component_status(net, &body, cfg)? {
            Some(s) => compose_status(Connective::Not, s, None),
            None => Composition::Underdetermined,
        },
        Decomposition::Binary(op, left, right) => {
            let conn = match op {
                BinOp::Or => Connective::Or,
                BinOp::And => Connective::And,
            };
            match (
                component_status(net, &left, cfg)?,
                component_status(net, &right, cfg)?,
            ) {
                (Some(l), Some(r)) => compose_status(conn, l, Some(r)),
                _ => Composition::Underdetermined,
            }
        }
    };
    match composition {
        Composition::Resolved(status, rule) => Ok(Cell {
            status: Some(status),
            resolved_by: rule,
        }),
        Composition::Underdetermined => match cfg.policy {
            FallbackPolicy::Oracle => {
                let status = classify(&parse(text)?, &cfg.oracle_cfg)?;
                Ok(Cell {
                    status: Some(status),
                    resolved_by: ResolvedBy::OracleFallback,
                })
            }
            FallbackPolicy::Audit => Ok(Cell {
                status: None,
                resolved_by: ResolvedBy::Unresolved,
            }),
        },
    }
}

const MAGIC: &str = "BOOLNET v1";

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Write the network as a line-oriented text file with a trailing
/// checksum over everything above it.
pub fn save(net: &Network, sink: &mut impl Write) -> Result<(), NetError> {
    if net.aborted {
        return Err(NetError::SaveAborted);
    }
    let mut body = String::new();
    body.push_str(&format!(
        "{MAGIC} k={} n={} policy={} cost_model={}\n",
        net.variable_count,
        net.frontier,
        net.policy.name(),
        net.cost_model.name()
    ));
    for (text, cell) in net.hosted() {
        let sym = match cell.status {
            Some(s) => s.symbol(),
            None => '?',
        };
        body.push_str(&format!("{text} {sym} {}\n", cell.resolved_by.tag()));
    }
    let m = net.metrics();
    body.push_str(&format!(
        "METRICS cells={} trie_nodes={} build_ops={} base_cells={} fast_path_cells={} fallback_cells={}\n",
        m.cells, m.trie_nodes, m.build_ops, m.base_cells, m.fast_path_cells, m.fallback_cells
    ));
    body.push_str("HIST");
    for (len, count) in &m.per_length {
        body.push_str(&format!(" {len}={count}"));
    }
    body.push('\n');
    let digest = Sha256::digest(body.as_bytes());
    sink.write_all(body.as_bytes())?;
    writeln!(sink, "CHECKSUM {}", hex(&digest))?;
    Ok(())
}

fn format_err(line: usize, msg: impl Into<String>) -> NetError {
    NetError::Format {
        line,
        msg: msg.into(),
    }
}

fn parse_kv<'a>(part: &'a str, key: &str, line: usize) -> Result<&'a str, NetError> {
    part.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| format_err(line, format!("expected {key}=<value>, got '{part}'")))
}

/// Load a saved network, verifying the checksum before trusting anything.
pub fn load(source: &mut impl Read) -> Result<Network, NetError> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    // Split off the checksum line; the digest covers everything before it.
    let marker = b"CHECKSUM ";
    let pos = bytes
        .windows(marker.len())
        .rposition(|w| w == marker)
        .ok_or(NetError::Checksum)?;
    if pos != 0 && bytes[pos - 1] != b'\n' {
        return Err(NetError::Checksum);
    }
    let body = &bytes[..pos];
    let tail = &bytes[pos + marker.len()..];
    let stored = std::str::from_utf8(tail)
        .map_err(|_| NetError::Checksum)?
        .trim();
    if hex(&Sha256::digest(body)) != stored {
        return Err(NetError::Checksum);
    }
    let body = std::str::from_utf8(body).map_err(|_| format_err(0, "body is not UTF-8"))?;

    let mut lines = body.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| format_err(1, "missing header"))?;
    let rest = header
        .strip_prefix(MAGIC)
        .ok_or_else(|| format_err(1, "bad magic"))?;
    let parts: Vec<&str> = rest.split_whitespace().collect();
    if parts.len() != 4 {
        return Err(format_err(1, "header needs k, n, policy, cost_model"));
    }
    let k: u32 = parse_kv(parts[0], "k", 1)?
        .parse()
        .map_err(|_| format_err(1, "bad k"))?;
    let n: usize = parse_kv(parts[1], "n", 1)?
        .parse()
        .map_err(|_| format_err(1, "bad n"))?;
    let policy = FallbackPolicy::from_name(parse_kv(parts[2], "policy", 1)?)
        .ok_or_else(|| format_err(1, "bad policy"))?;
    let cost_model = CostModel::from_name(parse_kv(parts[3], "cost_model", 1)?)
        .ok_or_else(|| format_err(1, "bad cost model"))?;

    let mut net = Network::empty(k, n, policy, cost_model);
    let mut stored_metrics: Option<NetworkMetrics> = None;
    let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        if let Some(rest) = line.strip_prefix("METRICS ") {
            let mut m = NetworkMetrics::default();
            for part in rest.split_whitespace() {
                let (key, value) = part
                    .split_once('=')
                    .ok_or_else(|| format_err(lineno, "bad metrics field"))?;
                let value: u64 = value
                    .parse()
                    .map_err(|_| format_err(lineno, "bad metrics value"))?;
                match key {
                    "cells" => m.cells = value,
                    "trie_nodes" => m.trie_nodes = value,
                    "build_ops" => m.build_ops = value,
                    "base_cells" => m.base_cells = value,
                    "fast_path_cells" => m.fast_path_cells = value,
                    "fallback_cells" => m.fallback_cells = value,
                    _ => return Err(format_err(lineno, format!("unknown metric '{key}'"))),
                }
            }
            stored_metrics = Some(m);
        } else if let Some(rest) = line.strip_prefix("HIST") {
            for part in rest.split_whitespace() {
                let (len, count) = part
                    .split_once('=')
                    .ok_or_else(|| format_err(lineno, "bad histogram entry"))?;
                hist.insert(
                    len.parse().map_err(|_| format_err(lineno, "bad length"))?,
                    count.parse().map_err(|_| format_err(lineno, "bad count"))?,
                );
            }
        } else {
            let mut fields = line.split(' ');
            let (text, sym, tag) = match (fields.next(), fields.next(), fields.next(), fields.next())
            {
                (Some(t), Some(s), Some(r), None) => (t, s, r),
                _ => return Err(format_err(lineno, "cell record needs 3 fields")),
            };
            let status = match sym {
                "?" => None,
                s => Some(
                    s.chars()
                        .next()
                        .and_then(Status::from_symbol)
                        .ok_or_else(|| format_err(lineno, "bad status symbol"))?,
                ),
            };
            let resolved_by = ResolvedBy::from_tag(tag)
                .ok_or_else(|| format_err(lineno, "bad resolution tag"))?;
            if (status.is_none()) != (resolved_by == ResolvedBy::Unresolved) {
                return Err(format_err(lineno, "status symbol and tag disagree"));
            }
            net.set_cell(text, Cell { status, resolved_by });
        }
    }
    let stored_metrics =
        stored_metrics.ok_or_else(|| format_err(0, "missing METRICS footer"))?;
    // The rebuilt trie must agree with the recorded structural counters.
    if net.metrics.cells != stored_metrics.cells
        || net.metrics.trie_nodes != stored_metrics.trie_nodes
        || net.metrics.per_length != hist
    {
        return Err(format_err(0, "footer metrics disagree with records"));
    }
    net.metrics = NetworkMetrics {
        per_length: hist,
        ..stored_metrics
    };
    Ok(net)
}
