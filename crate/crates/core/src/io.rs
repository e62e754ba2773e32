//! Text formats for (incomplete) games and for solver results.
//!
//! Games use a PGSolver-style layout:
//!
//! ```text
//! parity 4;
//! semantics min;
//! incomplete 3;
//! 0 2 0 1,2 "u0";
//! 1 3 1 -;
//! ```
//!
//! Owners are `0` (Even) and `1` (Odd); a sink has the successor field `-`.
//! Results have one `<id> <0|1|?> [<successor>]` line per vertex and a
//! closing summary line.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::path::Path;

use thiserror::Error;

use crate::game::{Game, IncompleteGame, Player, Priority, Solution, VertexId};
use crate::vertex_set::VertexSet;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected `parity <max-id>;` header")]
    MissingHeader,
    #[error("vertex {0} is declared twice")]
    DuplicateVertex(u64),
    #[error("vertex {0} exceeds the declared maximum id")]
    VertexOutOfRange(u64),
    #[error("successor {0} is not a declared vertex")]
    SuccessorOutOfRange(u64),
    #[error("incomplete vertex {0} is not a declared vertex")]
    IncompleteOutOfRange(u64),
    #[error("{0}")]
    Malformed(String),
}

fn fail<T>(line: usize, kind: ParseErrorKind) -> Result<T, FormatError> {
    Err(FormatError::Parse { line, kind })
}

fn malformed<T>(line: usize, what: impl Into<String>) -> Result<T, FormatError> {
    fail(line, ParseErrorKind::Malformed(what.into()))
}

/// Priority convention of a game file.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum Semantics {
    /// The least priority seen infinitely often decides.
    #[default]
    Min,
    Max,
}

/// A parsed game with dense ids and the ids and labels of the file.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ParsedGame {
    pub game: IncompleteGame,
    /// File id of each dense vertex, ascending.
    pub ids: Vec<u64>,
    pub labels: Vec<Option<String>>,
}

impl ParsedGame {
    /// Wraps a game whose vertex ids are used as file ids.
    pub fn from_game(game: IncompleteGame) -> Self {
        let ids = game.vertices().iter().map(|v| v.index() as u64).collect();
        let labels = vec![None; game.game().id_bound()];
        Self { game, ids, labels }
    }

    /// Dense vertex of a file id.
    pub fn vertex(&self, file_id: u64) -> Option<VertexId> {
        self.ids.binary_search(&file_id).ok().map(VertexId::new)
    }

    /// File id of a dense vertex.
    pub fn file_id(&self, v: VertexId) -> u64 {
        self.ids.get(v.index()).copied().unwrap_or(v.index() as u64)
    }

    /// This game renumbered so that each file id gets the dense id it has
    /// in `other`. `None` if a file id of `self` does not occur in `other`.
    pub fn aligned_to(&self, other: &ParsedGame) -> Option<IncompleteGame> {
        let map: Vec<VertexId> = self
            .ids
            .iter()
            .map(|&id| other.vertex(id))
            .collect::<Option<_>>()?;
        let g = self.game.game();
        let mut inverse = vec![None; other.ids.len()];
        for (i, &t) in map.iter().enumerate() {
            inverse[t.index()] = Some(VertexId::new(i));
        }
        let mut game = Game::new();
        for slot in inverse {
            match slot {
                Some(v) => game.add_vertex(g.owner(v), g.priority(v)),
                None => game.add_vertex(Player::Even, Priority(0)),
            };
        }
        for (i, &t) in map.iter().enumerate() {
            for &w in g.successors(VertexId::new(i)) {
                game.add_edge(t, map[w.index()]);
            }
        }
        let keep: VertexSet = map.iter().copied().collect();
        let incomplete = self.game.incomplete().iter().map(|v| map[v.index()]).collect();
        IncompleteGame::new(game.subgame(&keep), incomplete).ok()
    }
}

struct Record {
    line: usize,
    id: u64,
    priority: u32,
    owner: Player,
    successors: Vec<u64>,
    label: Option<String>,
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, FormatError> {
    token
        .parse()
        .or_else(|_| malformed(line, format!("invalid {what} `{token}`")))
}

fn id_list(line: usize, field: &str) -> Result<Vec<u64>, FormatError> {
    field
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| number(line, s, "vertex id"))
        .collect()
}

fn parse_record(line: usize, body: &str) -> Result<Record, FormatError> {
    let (fields, label) = match body.find('"') {
        Some(open) => {
            let close = body.rfind('"').filter(|&c| c > open);
            let Some(close) = close else {
                return malformed(line, "unterminated label");
            };
            if !body[close + 1..].trim().is_empty() {
                return malformed(line, "text after label");
            }
            (&body[..open], Some(body[open + 1..close].to_owned()))
        }
        None => (body, None),
    };
    let tokens: Vec<&str> = fields.split_whitespace().collect();
    let [id, priority, owner, successors] = tokens[..] else {
        return malformed(line, "expected `<id> <priority> <owner> <successors>`");
    };
    let owner = match owner {
        "0" => Player::Even,
        "1" => Player::Odd,
        other => return malformed(line, format!("owner must be 0 or 1, got `{other}`")),
    };
    let successors = if successors == "-" {
        Vec::new()
    } else {
        id_list(line, successors)?
    };
    Ok(Record {
        line,
        id: number(line, id, "vertex id")?,
        priority: number(line, priority, "priority")?,
        owner,
        successors,
        label,
    })
}

/// Parses a game file. Sparse ids are compacted in ascending order and
/// max-semantics priorities are converted to the min convention.
pub fn parse_game(text: &str) -> Result<ParsedGame, FormatError> {
    let mut max_id = None;
    let mut semantics = Semantics::Min;
    let mut incomplete: Vec<(usize, u64)> = Vec::new();
    let mut records: Vec<Record> = Vec::new();
    let mut seen: HashMap<u64, usize> = HashMap::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let stmt = raw.trim();
        if stmt.is_empty() {
            continue;
        }
        let Some(body) = stmt.strip_suffix(';') else {
            return malformed(line, "missing `;`");
        };
        let body = body.trim();
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        if max_id.is_none() {
            if keyword != "parity" {
                return fail(line, ParseErrorKind::MissingHeader);
            }
            max_id = Some(number::<u64>(line, rest.trim(), "maximum id")?);
            continue;
        }
        match keyword {
            "parity" => return malformed(line, "repeated header"),
            "semantics" => {
                semantics = match rest.trim() {
                    "min" => Semantics::Min,
                    "max" => Semantics::Max,
                    other => return malformed(line, format!("unknown semantics `{other}`")),
                }
            }
            "incomplete" => incomplete.extend(id_list(line, rest)?.into_iter().map(|id| (line, id))),
            "start" => {}
            _ => {
                let record = parse_record(line, body)?;
                if record.id > max_id.unwrap_or(0) {
                    return fail(line, ParseErrorKind::VertexOutOfRange(record.id));
                }
                if seen.insert(record.id, line).is_some() {
                    return fail(line, ParseErrorKind::DuplicateVertex(record.id));
                }
                records.push(record);
            }
        }
    }
    if max_id.is_none() {
        return fail(1, ParseErrorKind::MissingHeader);
    }

    records.sort_by_key(|r| r.id);
    let ids: Vec<u64> = records.iter().map(|r| r.id).collect();
    let dense = |id: u64| ids.binary_search(&id).ok().map(VertexId::new);
    let top = records.iter().map(|r| r.priority).max().unwrap_or(0);
    let convert = |p: u32| match semantics {
        Semantics::Min => p,
        Semantics::Max if top % 2 == 0 => top - p,
        Semantics::Max => top + 1 - p,
    };

    let mut game = Game::new();
    for r in &records {
        game.add_vertex(r.owner, Priority(convert(r.priority)));
    }
    for (i, r) in records.iter().enumerate() {
        for &s in &r.successors {
            let Some(w) = dense(s) else {
                return fail(r.line, ParseErrorKind::SuccessorOutOfRange(s));
            };
            game.add_edge(VertexId::new(i), w);
        }
    }
    let mut open = VertexSet::new();
    for (line, id) in incomplete {
        match dense(id) {
            Some(v) => {
                open.insert(v);
            }
            None => return fail(line, ParseErrorKind::IncompleteOutOfRange(id)),
        }
    }
    let labels = records.into_iter().map(|r| r.label).collect();
    let game = IncompleteGame::new(game, open).expect("incomplete ids were resolved");
    Ok(ParsedGame { game, ids, labels })
}

pub fn read_game(path: impl AsRef<Path>) -> Result<ParsedGame, FormatError> {
    parse_game(&std::fs::read_to_string(path)?)
}

fn join(ids: impl Iterator<Item = u64>) -> String {
    ids.map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

/// Writes a game in min semantics, ordered by id.
pub fn serialize_game(parsed: &ParsedGame) -> String {
    let g = &parsed.game;
    let game = g.game();
    let max_id = game.vertices().iter().map(|v| parsed.file_id(v)).max().unwrap_or(0);
    let mut out = format!("parity {max_id};\nsemantics min;\n");
    if !g.incomplete().is_empty() {
        let ids = join(g.incomplete().iter().map(|v| parsed.file_id(v)));
        let _ = writeln!(out, "incomplete {ids};");
    }
    for v in game.vertices().iter() {
        let succ = game.successors(v);
        let field = if succ.is_empty() {
            "-".to_owned()
        } else {
            let mut ids: Vec<u64> = succ.iter().map(|&w| parsed.file_id(w)).collect();
            ids.sort_unstable();
            join(ids.into_iter())
        };
        let owner = game.owner(v).index();
        let _ = write!(out, "{} {} {owner} {field}", parsed.file_id(v), game.priority(v).0);
        if let Some(Some(label)) = parsed.labels.get(v.index()) {
            let _ = write!(out, " \"{label}\"");
        }
        out.push_str(";\n");
    }
    out
}

pub fn write_game(path: impl AsRef<Path>, parsed: &ParsedGame) -> Result<(), FormatError> {
    Ok(std::fs::write(path, serialize_game(parsed))?)
}

/// One vertex of a result file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultEntry {
    pub id: u64,
    pub winner: Option<Player>,
    pub strategy: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub explored: u64,
    pub solver_calls: u64,
    pub explore_ms: u64,
    pub solve_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResultFile {
    pub entries: Vec<ResultEntry>,
    /// The designated vertex of an exploration run and its winner, if known.
    pub designated: Option<(u64, Option<Player>)>,
    pub summary: Summary,
}

impl ResultFile {
    /// One entry per vertex of `game`, using the file ids of `parsed`.
    pub fn from_solution(parsed: &ParsedGame, solution: &Solution, summary: Summary) -> Self {
        let entries = parsed
            .game
            .vertices()
            .iter()
            .map(|v| ResultEntry {
                id: parsed.file_id(v),
                winner: solution.winner(v),
                strategy: solution.strategy.get(&v).map(|&w| parsed.file_id(w)),
            })
            .collect();
        Self {
            entries,
            designated: None,
            summary,
        }
    }

    pub fn is_total(&self) -> bool {
        self.entries.iter().all(|e| e.winner.is_some())
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut result = ResultFile::default();
        let mut summary = None;
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let stmt = raw.trim();
            if stmt.is_empty() {
                continue;
            }
            if summary.is_some() {
                return malformed(line, "text after summary");
            }
            if stmt.starts_with("explored=") {
                let fields = key_values(line, stmt)?;
                let get = |key: &str| {
                    fields
                        .iter()
                        .find(|(k, _)| *k == key)
                        .map(|&(_, v)| v)
                        .map_or_else(|| malformed(line, format!("missing `{key}`")), |v| number(line, v, key))
                };
                summary = Some(Summary {
                    explored: get("explored")?,
                    solver_calls: get("solver_calls")?,
                    explore_ms: get("explore_ms")?,
                    solve_ms: get("solve_ms")?,
                });
            } else if stmt.starts_with("designated=") {
                let fields = key_values(line, stmt)?;
                let [("designated", id), ("decided", winner)] = fields[..] else {
                    return malformed(line, "expected `designated=<id> decided=<0|1|?>`");
                };
                result.designated = Some((number(line, id, "vertex id")?, winner_of(line, winner)?));
            } else {
                let tokens: Vec<&str> = stmt.split_whitespace().collect();
                let (id, winner, strategy) = match tokens[..] {
                    [id, winner] => (id, winner, None),
                    [id, winner, succ] => (id, winner, Some(number(line, succ, "successor")?)),
                    _ => return malformed(line, "expected `<id> <0|1|?> [<successor>]`"),
                };
                result.entries.push(ResultEntry {
                    id: number(line, id, "vertex id")?,
                    winner: winner_of(line, winner)?,
                    strategy,
                });
            }
        }
        match summary {
            Some(s) => result.summary = s,
            None => return malformed(text.lines().count().max(1), "missing summary line"),
        }
        Ok(result)
    }
}

fn key_values(line: usize, stmt: &str) -> Result<Vec<(&str, &str)>, FormatError> {
    stmt.split_whitespace()
        .map(|kv| {
            kv.split_once('=')
                .map_or_else(|| malformed(line, format!("expected key=value, got `{kv}`")), Ok)
        })
        .collect()
}

fn winner_of(line: usize, token: &str) -> Result<Option<Player>, FormatError> {
    match token {
        "0" => Ok(Some(Player::Even)),
        "1" => Ok(Some(Player::Odd)),
        "?" => Ok(None),
        other => malformed(line, format!("winner must be 0, 1 or ?, got `{other}`")),
    }
}

fn winner_token(w: Option<Player>) -> char {
    match w {
        Some(Player::Even) => '0',
        Some(Player::Odd) => '1',
        None => '?',
    }
}

impl fmt::Display for ResultFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{} {}", e.id, winner_token(e.winner))?;
            if let Some(s) = e.strategy {
                write!(f, " {s}")?;
            }
            writeln!(f)?;
        }
        if let Some((id, winner)) = self.designated {
            writeln!(f, "designated={id} decided={}", winner_token(winner))?;
        }
        let s = &self.summary;
        writeln!(
            f,
            "explored={} solver_calls={} explore_ms={} solve_ms={}",
            s.explored, s.solver_calls, s.explore_ms, s.solve_ms
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use Player::*;

    const SIX: &str = "parity 5;
incomplete 3,5;
0 2 0 1,2 \"u0\";
1 3 1 -;
2 0 0 0;
3 2 0 2;
4 1 1 3,2,5;
5 2 1 - \"u5\";
";

    fn error_kind(text: &str) -> (usize, ParseErrorKind) {
        match parse_game(text) {
            Err(FormatError::Parse { line, kind }) => (line, kind),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn six_vertex_snapshot_parses() {
        let parsed = parse_game(SIX).unwrap();
        assert_eq!(parsed.game, fixtures::six_vertex_snapshot());
        assert_eq!(parsed.labels[0].as_deref(), Some("u0"));
        assert_eq!(parsed.labels[1], None);
        let again = parse_game(&serialize_game(&parsed)).unwrap();
        assert_eq!(again, parsed);
    }

    #[test]
    fn sparse_ids_are_compacted() {
        let parsed = parse_game("parity 30;\n30 1 1 10;\n10 0 0 30,10;\n").unwrap();
        assert_eq!(parsed.ids, [10, 30]);
        let g = parsed.game.game();
        assert_eq!(g.successors(VertexId::new(1)), [VertexId::new(0)]);
        assert_eq!(g.priority(VertexId::new(1)), Priority(1));
        assert_eq!(parsed.vertex(30), Some(VertexId::new(1)));
        assert!(serialize_game(&parsed).contains("30 1 1 10;"));
    }

    #[test]
    fn max_semantics_keeps_parity() {
        let even_top = parse_game("parity 2;\nsemantics max;\n0 0 0 1;\n1 1 0 2;\n2 2 1 0;\n").unwrap();
        let prios: Vec<u32> = (0..3).map(|i| even_top.game.game().priority(VertexId::new(i)).0).collect();
        assert_eq!(prios, [2, 1, 0]);
        let odd_top = parse_game("parity 1;\nsemantics max;\n0 0 0 1;\n1 3 0 0;\n").unwrap();
        let prios: Vec<u32> = (0..2).map(|i| odd_top.game.game().priority(VertexId::new(i)).0).collect();
        assert_eq!(prios, [4, 1]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(error_kind("0 1 0 0;\n"), (1, ParseErrorKind::MissingHeader));
        assert_eq!(error_kind("parity 1;\n0 1 0 0;\n0 1 0 0;\n"), (3, ParseErrorKind::DuplicateVertex(0)));
        assert_eq!(error_kind("parity 1;\n0 1 0 7;\n"), (2, ParseErrorKind::SuccessorOutOfRange(7)));
        assert_eq!(error_kind("parity 1;\n\n0 1 0 0;\n5 1 0 0;\n"), (4, ParseErrorKind::VertexOutOfRange(5)));
        assert_eq!(
            error_kind("parity 1;\nincomplete 4;\n0 1 0 0;\n"),
            (2, ParseErrorKind::IncompleteOutOfRange(4))
        );
        assert!(matches!(error_kind("parity 1;\n0 1 2 0;\n"), (2, ParseErrorKind::Malformed(_))));
        assert!(matches!(error_kind("parity 1;\n0 1 0 0\n"), (2, ParseErrorKind::Malformed(_))));
    }

    #[test]
    fn alignment_by_file_ids() {
        let small = parse_game("parity 9;\nincomplete 9;\n4 0 0 9;\n9 1 1 -;\n").unwrap();
        let big = parse_game("parity 9;\n1 2 1 4;\n4 0 0 9;\n9 1 1 1;\n").unwrap();
        let aligned = small.aligned_to(&big).unwrap();
        assert!(aligned.is_extended_by(&big.game));
        assert!(!aligned.vertices().contains(VertexId::new(0)));
        assert!(big.aligned_to(&small).is_none());
    }

    #[test]
    fn no_incomplete_line_means_complete() {
        let parsed = parse_game("parity 0;\nstart 0;\n0 0 0 0;\n").unwrap();
        assert!(parsed.game.incomplete().is_empty());
    }

    #[test]
    fn result_file_round_trip() {
        let parsed = ParsedGame::from_game(IncompleteGame::complete(fixtures::five_vertex_game()));
        let mut sol = Solution::from_regions(
            parsed.game.vertices(),
            [0, 1, 2].into_iter().map(VertexId::new).collect(),
            [3].into_iter().map(VertexId::new).collect(),
            Default::default(),
        );
        sol.strategy.insert(VertexId::new(0), VertexId::new(2));
        let mut file = ResultFile::from_solution(
            &parsed,
            &sol,
            Summary {
                explored: 5,
                solver_calls: 1,
                explore_ms: 0,
                solve_ms: 3,
            },
        );
        file.designated = Some((3, Some(Odd)));
        let text = file.to_string();
        assert!(text.starts_with("0 0 2\n1 0\n"));
        assert!(text.contains("4 ?\n"));
        assert!(text.ends_with("designated=3 decided=1\nexplored=5 solver_calls=1 explore_ms=0 solve_ms=3\n"));
        assert_eq!(ResultFile::parse(&text).unwrap(), file);
        assert!(!file.is_total());
        assert!(ResultFile::parse("0 0\n").is_err());
    }
}
