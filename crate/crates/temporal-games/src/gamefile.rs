//! The line-oriented game file format, the availability expression grammar,
//! witness serialization, and the solve dispatcher shared by the CLI and the
//! Python bindings.
//!
//! ```text
//! # comment
//! kind static|temporal-explicit|temporal-symbolic
//! vertex NAME owner=1|2
//! edge SRC DST avail=EXPR      (avail omitted and implied always: kind static only)
//! start NAME
//! objective reach V1 [V2 ...]
//! objective genreach { V1 V2 } { V3 } ...
//! objective explore
//! option waiting=on|off        (kind temporal-explicit only)
//! ```
//!
//! Availability expressions: `[lo,hi]`, `{t1,t2,...}`, `ap(base,period)`,
//! `bit(k)=0|1`, `always`, `never`, combined with `!`, `&`, `|` and
//! parentheses. Explicit temporal graphs only permit unions of intervals and
//! finite sets.

use crate::arena::{Objective, Player, SolveOutcome, StaticArena, TimedVisit, VertexId};
use crate::symbolic::{solve_symbolic, AvailFormula, SymbolicTemporalGraph};
use crate::temporal::{
    apply_waiting, enumerate_explorations, solve_temporal, TemporalGraph, TimeSet,
};
use crate::{Error, Limits, Result};

/// Representation kind declared by a game file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameKind {
    Static,
    TemporalExplicit,
    TemporalSymbolic,
}

impl GameKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            GameKind::Static => "static",
            GameKind::TemporalExplicit => "temporal-explicit",
            GameKind::TemporalSymbolic => "temporal-symbolic",
        }
    }
}

/// The game value carried by a parsed file.
#[derive(Debug, Clone)]
pub enum GameForm {
    Static(StaticArena),
    Temporal(TemporalGraph),
    Symbolic(SymbolicTemporalGraph),
}

impl GameForm {
    pub fn kind(&self) -> GameKind {
        match self {
            GameForm::Static(_) => GameKind::Static,
            GameForm::Temporal(_) => GameKind::TemporalExplicit,
            GameForm::Symbolic(_) => GameKind::TemporalSymbolic,
        }
    }

    pub fn index_of(&self, name: &str) -> Option<VertexId> {
        match self {
            GameForm::Static(a) => a.index_of(name),
            GameForm::Temporal(g) => g.index_of(name),
            GameForm::Symbolic(g) => g.index_of(name),
        }
    }

    pub fn name(&self, v: VertexId) -> &str {
        match self {
            GameForm::Static(a) => a.name(v),
            GameForm::Temporal(g) => g.name(v),
            GameForm::Symbolic(g) => g.name(v),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            GameForm::Static(a) => a.vertex_count(),
            GameForm::Temporal(g) => g.vertex_count(),
            GameForm::Symbolic(g) => g.vertex_count(),
        }
    }

    pub fn is_one_player(&self) -> bool {
        match self {
            GameForm::Static(a) => a.is_one_player(),
            GameForm::Temporal(g) => g.is_one_player(),
            GameForm::Symbolic(g) => g.is_one_player(),
        }
    }
}

/// A fully parsed game file: the game, its start vertex, the objective and
/// the waiting option.
#[derive(Debug, Clone)]
pub struct GameFile {
    pub game: GameForm,
    pub start: VertexId,
    pub objective: Objective,
    pub waiting: bool,
}

// ---------------------------------------------------------------------------
// Availability expressions
// ---------------------------------------------------------------------------

struct ExprParser<'a> {
    input: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> ExprParser<'a> {
    fn new(input: &'a str, line: usize) -> Self {
        ExprParser {
            input: input.as_bytes(),
            pos: 0,
            line,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", byte as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let begin = self.pos;
        while self
            .input
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if begin == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.input[begin..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number out of range"))
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let begin = self.pos;
        while self
            .input
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphabetic())
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.input[begin..self.pos]).into_owned()
    }

    fn or(&mut self) -> Result<AvailFormula> {
        let mut parts = vec![self.and()?];
        while self.peek() == Some(b'|') {
            self.pos += 1;
            parts.push(self.and()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            AvailFormula::Or(parts)
        })
    }

    fn and(&mut self) -> Result<AvailFormula> {
        let mut parts = vec![self.atom()?];
        while self.peek() == Some(b'&') {
            self.pos += 1;
            parts.push(self.atom()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            AvailFormula::And(parts)
        })
    }

    fn atom(&mut self) -> Result<AvailFormula> {
        match self.peek() {
            Some(b'!') => {
                self.pos += 1;
                Ok(AvailFormula::Not(Box::new(self.atom()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.or()?;
                self.eat(b')')?;
                Ok(inner)
            }
            _ => self.prim(),
        }
    }

    fn prim(&mut self) -> Result<AvailFormula> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let lo = self.number()?;
                self.eat(b',')?;
                let hi = self.number()?;
                self.eat(b']')?;
                if lo > hi {
                    return Err(self.err(format!("interval [{lo},{hi}] is empty")));
                }
                Ok(AvailFormula::Interval(lo, hi))
            }
            Some(b'{') => {
                self.pos += 1;
                let mut parts = vec![];
                loop {
                    let t = self.number()?;
                    parts.push(AvailFormula::Interval(t, t));
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                        }
                        Some(b'}') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.err("expected `,` or `}`")),
                    }
                }
                Ok(if parts.len() == 1 {
                    parts.pop().unwrap()
                } else {
                    AvailFormula::Or(parts)
                })
            }
            _ => {
                let word = self.ident();
                match word.as_str() {
                    "always" => Ok(AvailFormula::Always),
                    "never" => Ok(AvailFormula::Never),
                    "ap" => {
                        self.eat(b'(')?;
                        let base = self.number()?;
                        self.eat(b',')?;
                        let period = self.number()?;
                        self.eat(b')')?;
                        if period == 0 {
                            return Err(self.err("ap period must be at least 1"));
                        }
                        Ok(AvailFormula::ArithProg { base, period })
                    }
                    "bit" => {
                        self.eat(b'(')?;
                        let index = self.number()?;
                        self.eat(b')')?;
                        self.eat(b'=')?;
                        let value = self.number()?;
                        if index >= 64 {
                            return Err(self.err("bit index must be below 64"));
                        }
                        if value > 1 {
                            return Err(self.err("bit value must be 0 or 1"));
                        }
                        Ok(AvailFormula::bit_eq(index as u32, value == 1))
                    }
                    "" => Err(self.err("expected an availability expression")),
                    other => Err(self.err(format!("unknown keyword `{other}`"))),
                }
            }
        }
    }
}

/// Parses an availability expression.
pub fn parse_avail_expr(text: &str) -> Result<AvailFormula> {
    parse_avail_expr_at(text, 0)
}

fn parse_avail_expr_at(text: &str, line: usize) -> Result<AvailFormula> {
    let mut parser = ExprParser::new(text, line);
    let formula = parser.or()?;
    parser.skip_ws();
    if parser.pos != parser.input.len() {
        return Err(parser.err("trailing input after expression"));
    }
    Ok(formula)
}

/// Canonical printer for availability expressions; output reparses to the
/// same formula.
pub fn format_avail_formula(formula: &AvailFormula) -> String {
    fn atom(formula: &AvailFormula) -> String {
        match formula {
            AvailFormula::And(_) | AvailFormula::Or(_) => {
                format!("({})", format_avail_formula(formula))
            }
            _ => format_avail_formula(formula),
        }
    }
    match formula {
        AvailFormula::Interval(lo, hi) if lo == hi => format!("{{{lo}}}"),
        AvailFormula::Interval(lo, hi) => format!("[{lo},{hi}]"),
        AvailFormula::ArithProg { base, period } => format!("ap({base},{period})"),
        AvailFormula::BitEq { bit, value } => format!("bit({bit})={}", u8::from(*value)),
        AvailFormula::Always => "always".to_string(),
        AvailFormula::Never => "never".to_string(),
        AvailFormula::And(parts) => parts
            .iter()
            .map(atom)
            .collect::<Vec<_>>()
            .join(" & "),
        AvailFormula::Or(parts) => parts
            .iter()
            .map(|p| match p {
                AvailFormula::Or(_) => format!("({})", format_avail_formula(p)),
                _ => format_avail_formula(p),
            })
            .collect::<Vec<_>>()
            .join(" | "),
        AvailFormula::Not(inner) => format!("!{}", atom(inner)),
    }
}

/// Restricts a parsed expression to the explicit fragment (unions of
/// intervals and finite sets) and converts it to a time set.
fn formula_to_time_set(formula: &AvailFormula, line: usize) -> Result<TimeSet> {
    fn collect(formula: &AvailFormula, out: &mut Vec<(u64, u64)>, line: usize) -> Result<()> {
        match formula {
            AvailFormula::Interval(lo, hi) => {
                out.push((*lo, *hi));
                Ok(())
            }
            AvailFormula::Or(parts) => {
                for p in parts {
                    collect(p, out, line)?;
                }
                Ok(())
            }
            other => Err(Error::KindMismatch(format!(
                "line {line}: `{}` is not allowed under kind temporal-explicit",
                format_avail_formula(other)
            ))),
        }
    }
    let mut intervals = Vec::new();
    collect(formula, &mut intervals, line)?;
    TimeSet::new(intervals)
}

fn time_set_to_formula(times: &TimeSet) -> AvailFormula {
    let parts: Vec<AvailFormula> = times
        .intervals()
        .iter()
        .map(|&(lo, hi)| AvailFormula::Interval(lo, hi))
        .collect();
    match parts.len() {
        0 => AvailFormula::Never,
        1 => parts.into_iter().next().unwrap(),
        _ => AvailFormula::Or(parts),
    }
}

// ---------------------------------------------------------------------------
// Game files
// ---------------------------------------------------------------------------

fn validate_vertex_name(name: &str, line: usize) -> Result<()> {
    if name.is_empty() {
        return Err(Error::parse(line, "empty vertex name"));
    }
    if name.contains(['{', '}', '#']) {
        return Err(Error::parse(
            line,
            format!("vertex name `{name}` may not contain `{{`, `}}` or `#`"),
        ));
    }
    Ok(())
}

/// Parses a game file. The `kind` line must come first; vertices may be
/// declared in any position before use by `start`/`objective` resolution.
pub fn parse_game_file(text: &str) -> Result<GameFile> {
    struct EdgeLine {
        line: usize,
        src: String,
        dst: String,
        avail: Option<String>,
    }

    let mut kind: Option<GameKind> = None;
    let mut vertices: Vec<(String, Player)> = Vec::new();
    let mut edges: Vec<EdgeLine> = Vec::new();
    let mut start: Option<(usize, String)> = None;
    let mut objective: Option<(usize, Vec<String>)> = None;
    let mut waiting: Option<bool> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap();
        if kind.is_none() && head != "kind" {
            return Err(Error::parse(lineno, "the first directive must be `kind`"));
        }
        match head {
            "kind" => {
                if kind.is_some() {
                    return Err(Error::parse(lineno, "duplicate kind line"));
                }
                kind = Some(match tokens.next() {
                    Some("static") => GameKind::Static,
                    Some("temporal-explicit") => GameKind::TemporalExplicit,
                    Some("temporal-symbolic") => GameKind::TemporalSymbolic,
                    other => {
                        return Err(Error::parse(
                            lineno,
                            format!("unknown kind `{}`", other.unwrap_or("")),
                        ))
                    }
                });
            }
            "vertex" => {
                let name = tokens
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "vertex needs a name"))?;
                validate_vertex_name(name, lineno)?;
                let owner = match tokens.next() {
                    Some("owner=1") => Player::One,
                    Some("owner=2") => Player::Two,
                    _ => return Err(Error::parse(lineno, "expected `owner=1` or `owner=2`")),
                };
                vertices.push((name.to_string(), owner));
            }
            "edge" => {
                let src = tokens
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "edge needs a source"))?
                    .to_string();
                let dst = tokens
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "edge needs a destination"))?
                    .to_string();
                let rest: Vec<&str> = tokens.collect();
                let avail = if rest.is_empty() {
                    None
                } else {
                    let joined = rest.join(" ");
                    let Some(expr) = joined.strip_prefix("avail=") else {
                        return Err(Error::parse(lineno, "expected `avail=EXPR`"));
                    };
                    Some(expr.to_string())
                };
                edges.push(EdgeLine {
                    line: lineno,
                    src,
                    dst,
                    avail,
                });
            }
            "start" => {
                if start.is_some() {
                    return Err(Error::parse(lineno, "duplicate start line"));
                }
                let name = tokens
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "start needs a vertex"))?;
                start = Some((lineno, name.to_string()));
            }
            "objective" => {
                if objective.is_some() {
                    return Err(Error::parse(lineno, "duplicate objective line"));
                }
                let mut words = vec![tokens
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "objective needs a variant"))?
                    .to_string()];
                words.extend(tokens.map(str::to_string));
                objective = Some((lineno, words));
            }
            "option" => match tokens.next() {
                Some("waiting=on") => waiting = Some(true),
                Some("waiting=off") => waiting = Some(false),
                _ => return Err(Error::parse(lineno, "expected `waiting=on` or `waiting=off`")),
            },
            other => {
                return Err(Error::parse(lineno, format!("unknown directive `{other}`")));
            }
        }
    }

    let kind = kind.ok_or_else(|| Error::parse(0, "missing kind line"))?;
    let (start_line, start_name) = start.ok_or_else(|| Error::parse(0, "missing start line"))?;
    let (obj_line, obj_words) =
        objective.ok_or_else(|| Error::parse(0, "missing objective line"))?;
    if waiting.is_some() && kind != GameKind::TemporalExplicit {
        return Err(Error::KindMismatch(
            "option waiting applies only to kind temporal-explicit".into(),
        ));
    }

    fn resolve_edge(
        src: Option<VertexId>,
        dst: Option<VertexId>,
        e: &EdgeLine,
    ) -> Result<(VertexId, VertexId)> {
        let u = src.ok_or_else(|| Error::UnknownVertex(e.src.clone()))?;
        let v = dst.ok_or_else(|| Error::UnknownVertex(e.dst.clone()))?;
        Ok((u, v))
    }

    let game = match kind {
        GameKind::Static => {
            let mut pairs = Vec::new();
            for e in edges {
                if e.avail.is_some() {
                    return Err(Error::KindMismatch(format!(
                        "line {}: static edges take no avail expression",
                        e.line
                    )));
                }
                pairs.push((e.src, e.dst));
            }
            GameForm::Static(StaticArena::build(vertices, pairs)?)
        }
        GameKind::TemporalExplicit => {
            let mut graph = TemporalGraph::new(vertices)?;
            for e in edges {
                let expr = e.avail.as_deref().ok_or_else(|| {
                    Error::parse(e.line, "temporal edges need an avail expression")
                })?;
                let formula = parse_avail_expr_at(expr, e.line)?;
                let times = formula_to_time_set(&formula, e.line)?;
                let (u, v) = resolve_edge(graph.index_of(&e.src), graph.index_of(&e.dst), &e)?;
                graph.add_edge(u, v, times)?;
            }
            GameForm::Temporal(graph)
        }
        GameKind::TemporalSymbolic => {
            let mut graph = SymbolicTemporalGraph::new(vertices)?;
            for e in edges {
                let expr = e.avail.as_deref().ok_or_else(|| {
                    Error::parse(e.line, "symbolic edges need an avail expression")
                })?;
                let formula = parse_avail_expr_at(expr, e.line)?;
                let (u, v) = resolve_edge(graph.index_of(&e.src), graph.index_of(&e.dst), &e)?;
                graph.add_edge(u, v, formula)?;
            }
            GameForm::Symbolic(graph)
        }
    };

    let start_id = game
        .index_of(&start_name)
        .ok_or_else(|| Error::parse(start_line, format!("unknown start vertex `{start_name}`")))?;

    let resolve = |name: &str| -> Result<VertexId> {
        game.index_of(name)
            .ok_or_else(|| Error::parse(obj_line, format!("unknown vertex `{name}`")))
    };
    let objective = match obj_words[0].as_str() {
        "reach" => {
            if obj_words.len() < 2 {
                return Err(Error::parse(obj_line, "reach needs at least one target"));
            }
            Objective::Reach(
                obj_words[1..]
                    .iter()
                    .map(|w| resolve(w))
                    .collect::<Result<_>>()?,
            )
        }
        "genreach" => {
            let mut sets = Vec::new();
            let mut current: Option<Vec<VertexId>> = None;
            for word in &obj_words[1..] {
                match word.as_str() {
                    "{" => {
                        if current.is_some() {
                            return Err(Error::parse(obj_line, "nested `{`"));
                        }
                        current = Some(Vec::new());
                    }
                    "}" => {
                        let set = current
                            .take()
                            .ok_or_else(|| Error::parse(obj_line, "unmatched `}`"))?;
                        if set.is_empty() {
                            return Err(Error::parse(obj_line, "empty target set"));
                        }
                        sets.push(set);
                    }
                    name => {
                        current
                            .as_mut()
                            .ok_or_else(|| Error::parse(obj_line, "target outside `{ }`"))?
                            .push(resolve(name)?);
                    }
                }
            }
            if current.is_some() {
                return Err(Error::parse(obj_line, "unclosed `{`"));
            }
            if sets.is_empty() {
                return Err(Error::parse(obj_line, "genreach needs at least one set"));
            }
            Objective::GenReach(sets)
        }
        "explore" => {
            if obj_words.len() > 1 {
                return Err(Error::parse(obj_line, "explore takes no arguments"));
            }
            Objective::Explore
        }
        other => {
            return Err(Error::parse(
                obj_line,
                format!("unknown objective `{other}`"),
            ))
        }
    };

    Ok(GameFile {
        game,
        start: start_id,
        objective,
        waiting: waiting.unwrap_or(false),
    })
}

/// Canonical emitter; parsing the output reproduces the same game file.
pub fn emit_game_file(file: &GameFile) -> String {
    let mut out = String::new();
    out.push_str("kind ");
    out.push_str(file.game.kind().as_str());
    out.push('\n');
    let names: Vec<&str> = (0..file.game.vertex_count())
        .map(|i| file.game.name(VertexId(i as u32)))
        .collect();
    match &file.game {
        GameForm::Static(a) => {
            for v in a.vertices() {
                out.push_str(&format!("vertex {} owner={}\n", a.name(v), a.owner(v)));
            }
            for v in a.vertices() {
                for &u in a.successors(v) {
                    out.push_str(&format!("edge {} {}\n", a.name(v), a.name(u)));
                }
            }
        }
        GameForm::Temporal(g) => {
            for v in g.vertices() {
                out.push_str(&format!("vertex {} owner={}\n", g.name(v), g.owner(v)));
            }
            for (u, v, times) in g.edges() {
                out.push_str(&format!(
                    "edge {} {} avail={}\n",
                    g.name(u),
                    g.name(v),
                    format_avail_formula(&time_set_to_formula(times))
                ));
            }
        }
        GameForm::Symbolic(g) => {
            for v in g.vertices() {
                out.push_str(&format!("vertex {} owner={}\n", g.name(v), g.owner(v)));
            }
            for (u, v, formula) in g.edges() {
                out.push_str(&format!(
                    "edge {} {} avail={}\n",
                    g.name(u),
                    g.name(v),
                    format_avail_formula(formula)
                ));
            }
        }
    }
    out.push_str(&format!("start {}\n", names[file.start.index()]));
    match &file.objective {
        Objective::Reach(targets) => {
            out.push_str("objective reach");
            for t in targets {
                out.push_str(&format!(" {}", names[t.index()]));
            }
            out.push('\n');
        }
        Objective::GenReach(sets) => {
            out.push_str("objective genreach");
            for set in sets {
                out.push_str(" {");
                for t in set {
                    out.push_str(&format!(" {}", names[t.index()]));
                }
                out.push_str(" }");
            }
            out.push('\n');
        }
        Objective::Explore => out.push_str("objective explore\n"),
    }
    if file.waiting {
        out.push_str("option waiting=on\n");
    }
    out
}

// ---------------------------------------------------------------------------
// Witness serialization
// ---------------------------------------------------------------------------

/// Formats a timed walk as `v@t v@t ...` using the game's vertex names.
pub fn format_witness(game: &GameForm, witness: &[TimedVisit]) -> String {
    witness
        .iter()
        .map(|w| format!("{}@{}", game.name(w.vertex), w.time))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses witness text: whitespace-separated `v@t` tokens. A leading
/// `witness` token, `result ...` lines and `#` comments are ignored, so the
/// output of `solve --witness` can be verified directly. The time is the
/// part after the last `@`, which keeps names containing `@` working.
pub fn parse_witness(text: &str) -> Result<Vec<(String, u64)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() || line.starts_with("result") {
            continue;
        }
        for token in line.split_whitespace() {
            if token == "witness" && out.is_empty() {
                continue;
            }
            let Some(at) = token.rfind('@') else {
                return Err(Error::parse(lineno, format!("expected `v@t`, got `{token}`")));
            };
            let (name, time) = token.split_at(at);
            let time: u64 = time[1..]
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad time in `{token}`")))?;
            if name.is_empty() {
                return Err(Error::parse(lineno, format!("missing vertex in `{token}`")));
            }
            out.push((name.to_string(), time));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Solve dispatcher
// ---------------------------------------------------------------------------

/// Solving method selection for [`solve_game_file`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Auto,
    Expand,
    Search,
    Product,
}

impl std::str::FromStr for SolveMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<SolveMethod> {
        match s {
            "auto" => Ok(SolveMethod::Auto),
            "expand" => Ok(SolveMethod::Expand),
            "search" => Ok(SolveMethod::Search),
            "product" => Ok(SolveMethod::Product),
            other => Err(Error::Invalid(format!("unknown method `{other}`"))),
        }
    }
}

/// Solves a parsed game file. `waiting` unions the file's own option with an
/// external request (the CLI flag). Returns the outcome and the name of the
/// method that ran.
///
/// `auto` picks the dedicated search for one-player explicit exploration,
/// the expansion otherwise for explicit graphs, the periodic product for
/// symbolic graphs, and direct solving for static arenas.
pub fn solve_game_file(
    file: &GameFile,
    method: SolveMethod,
    waiting: bool,
    limits: &Limits,
) -> Result<(SolveOutcome, &'static str)> {
    let waiting = waiting || file.waiting;
    match &file.game {
        GameForm::Static(arena) => {
            if waiting {
                return Err(Error::KindMismatch(
                    "waiting applies only to kind temporal-explicit".into(),
                ));
            }
            if method != SolveMethod::Auto {
                return Err(Error::Invalid(
                    "static games are solved directly; use --method auto".into(),
                ));
            }
            let outcome = match &file.objective {
                Objective::Reach(targets) => {
                    crate::arena::solve_reachability(arena, file.start, targets)?
                }
                Objective::GenReach(sets) => crate::arena::solve_generalized_reachability(
                    arena, file.start, sets, limits,
                )?,
                Objective::Explore => {
                    crate::arena::solve_static_explorability(arena, file.start)
                }
            };
            Ok((outcome, "static"))
        }
        GameForm::Temporal(graph) => {
            let solved_graph;
            let graph = if waiting && !graph.waiting() {
                solved_graph = apply_waiting(graph);
                &solved_graph
            } else {
                graph
            };
            let use_search = match method {
                SolveMethod::Search => true,
                SolveMethod::Auto => {
                    graph.is_one_player() && file.objective == Objective::Explore
                }
                SolveMethod::Expand => false,
                SolveMethod::Product => {
                    return Err(Error::Invalid(
                        "method product applies only to kind temporal-symbolic".into(),
                    ))
                }
            };
            if use_search {
                if file.objective != Objective::Explore {
                    return Err(Error::Invalid(
                        "method search only solves explore objectives".into(),
                    ));
                }
                let outcome = enumerate_explorations(graph, file.start, limits)?;
                Ok((outcome, "search"))
            } else {
                let outcome = solve_temporal(graph, file.start, &file.objective, limits)?;
                Ok((outcome, "expand"))
            }
        }
        GameForm::Symbolic(graph) => {
            if waiting {
                return Err(Error::KindMismatch(
                    "waiting applies only to kind temporal-explicit".into(),
                ));
            }
            if !matches!(method, SolveMethod::Auto | SolveMethod::Product) {
                return Err(Error::Invalid(
                    "symbolic games are solved with --method product".into(),
                ));
            }
            let outcome = solve_symbolic(graph, file.start, &file.objective, limits)?;
            Ok((outcome, "product"))
        }
    }
}

/// Resolves a parsed witness against the game's vertex names; `None` when a
/// name is unknown.
pub fn resolve_witness(game: &GameForm, witness: &[(String, u64)]) -> Option<Vec<TimedVisit>> {
    witness
        .iter()
        .map(|(name, time)| {
            game.index_of(name).map(|vertex| TimedVisit {
                vertex,
                time: *time,
            })
        })
        .collect()
}

/// Checks a witness walk against a game file, applying the waiting transform
/// when requested.
pub fn verify_witness_against(
    file: &GameFile,
    witness: &[(String, u64)],
    waiting: bool,
    _limits: &Limits,
) -> Result<bool> {
    let Some(walk) = resolve_witness(&file.game, witness) else {
        return Ok(false);
    };
    let waiting = waiting || file.waiting;
    let ok = match &file.game {
        GameForm::Static(arena) => {
            if waiting {
                return Err(Error::KindMismatch(
                    "waiting applies only to kind temporal-explicit".into(),
                ));
            }
            crate::verify::check_witness(
                crate::verify::GameRef::Static(arena),
                file.start,
                &file.objective,
                &walk,
            )
        }
        GameForm::Temporal(graph) => {
            let transformed;
            let graph = if waiting && !graph.waiting() {
                transformed = apply_waiting(graph);
                &transformed
            } else {
                graph
            };
            crate::verify::check_witness(
                crate::verify::GameRef::Temporal(graph),
                file.start,
                &file.objective,
                &walk,
            )
        }
        GameForm::Symbolic(graph) => {
            if waiting {
                return Err(Error::KindMismatch(
                    "waiting applies only to kind temporal-explicit".into(),
                ));
            }
            crate::verify::check_witness(
                crate::verify::GameRef::Symbolic(graph),
                file.start,
                &file.objective,
                &walk,
            )
        }
    };
    Ok(ok)
}
