//! Single-move word equivalences and bounded search.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::action::homology_action;
use super::{Letter, McgError, SurfaceModel, TwistWord};

pub const DEFAULT_REWRITE_DEPTH: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// A named relation of the model, used in either direction or inverted.
    Relation(String),
    /// `x y x = y x y` for curves meeting once.
    Braid,
    /// Trace equivalence: reorder commuting twists.
    Commute,
    /// Cyclic rotation of the non-central letters (a conjugation).
    Rotate,
    /// Insert or delete an adjacent `x x^-1`.
    Cancel,
    /// Bounded breadth-first search over the moves above.
    Auto,
}

impl Move {
    pub fn parse(name: &str) -> Self {
        match name {
            "braid" => Move::Braid,
            "commute" => Move::Commute,
            "rotate" => Move::Rotate,
            "cancel" => Move::Cancel,
            "auto" => Move::Auto,
            other => Move::Relation(other.to_string()),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Relation(name) => f.write_str(name),
            Move::Braid => f.write_str("braid"),
            Move::Commute => f.write_str("commute"),
            Move::Rotate => f.write_str("rotate"),
            Move::Cancel => f.write_str("cancel"),
            Move::Auto => f.write_str("auto"),
        }
    }
}

type Rule = (Vec<Letter>, Vec<Letter>);

fn relation_rules(s: &SurfaceModel, name: &str) -> Result<Vec<Rule>, McgError> {
    let r = s
        .relation(name)
        .ok_or_else(|| McgError::UnknownMove(name.to_string()))?;
    Ok(directed_variants(&r.left, &r.right))
}

fn directed_variants(l: &TwistWord, r: &TwistWord) -> Vec<Rule> {
    let (li, ri) = (l.inverse(), r.inverse());
    vec![
        (l.letters().to_vec(), r.letters().to_vec()),
        (r.letters().to_vec(), l.letters().to_vec()),
        (li.letters().to_vec(), ri.letters().to_vec()),
        (ri.letters().to_vec(), li.letters().to_vec()),
    ]
}

fn braid_rules(s: &SurfaceModel) -> Vec<Rule> {
    let mut out = Vec::new();
    for (x, y) in s.meets_once_pairs() {
        let l = TwistWord::new(vec![
            Letter::new(x, 1),
            Letter::new(y, 1),
            Letter::new(x, 1),
        ]);
        let r = TwistWord::new(vec![
            Letter::new(y, 1),
            Letter::new(x, 1),
            Letter::new(y, 1),
        ]);
        out.extend(directed_variants(&l, &r));
    }
    out
}

fn all_rules(s: &SurfaceModel) -> Vec<(Move, Rule)> {
    let mut out: Vec<(Move, Rule)> = braid_rules(s)
        .into_iter()
        .map(|r| (Move::Braid, r))
        .collect();
    for rel in s.relations() {
        for r in directed_variants(&rel.left, &rel.right) {
            out.push((Move::Relation(rel.name.clone()), r));
        }
    }
    out
}

fn rewrites(w: &[Letter], rule: &Rule) -> Vec<Vec<Letter>> {
    let (l, r) = rule;
    if l.is_empty() || l.len() > w.len() {
        return Vec::new();
    }
    (0..=w.len() - l.len())
        .filter(|&i| w[i..i + l.len()] == l[..])
        .map(|i| {
            let mut v = w[..i].to_vec();
            v.extend(r.iter().cloned());
            v.extend(w[i + l.len()..].iter().cloned());
            v
        })
        .collect()
}

fn one_rewrite(w1: &[Letter], w2: &[Letter], rules: &[Rule]) -> bool {
    rules
        .iter()
        .any(|rule| rewrites(w1, rule).iter().any(|v| v[..] == w2[..]))
}

/// Equality in the trace monoid with independence "the twists commute",
/// decided by comparing projections onto every dependent pair of letters.
pub fn trace_equivalent(s: &SurfaceModel, w1: &TwistWord, w2: &TwistWord) -> bool {
    let (a, b) = (w1.letters(), w2.letters());
    if a.len() != b.len() {
        return false;
    }
    let mut alphabet: Vec<&Letter> = a.iter().collect();
    alphabet.sort();
    alphabet.dedup();
    let count = |w: &[Letter], x: &Letter| w.iter().filter(|l| *l == x).count();
    if alphabet.iter().any(|x| count(a, x) != count(b, x)) || b.iter().any(|x| count(a, x) == 0) {
        return false;
    }
    for (i, x) in alphabet.iter().enumerate() {
        for y in &alphabet[i + 1..] {
            if s.commute(&x.curve, &y.curve) {
                continue;
            }
            let project = |w: &[Letter]| -> Vec<bool> {
                w.iter()
                    .filter(|l| l == x || l == y)
                    .map(|l| l == *x)
                    .collect()
            };
            if project(a) != project(b) {
                return false;
            }
        }
    }
    true
}

fn split_central<'a>(s: &SurfaceModel, w: &'a [Letter]) -> (Vec<&'a Letter>, Vec<&'a Letter>) {
    w.iter().partition(|l| !s.is_central(&l.curve))
}

/// If the non-central letters of `w2` are a cyclic rotation of those of `w1`
/// and the central letters agree as multisets, returns the prefix of `w1`'s
/// non-central letters that was moved to the end.
pub fn rotation_prefix(s: &SurfaceModel, w1: &TwistWord, w2: &TwistWord) -> Option<TwistWord> {
    let (n1, mut c1) = split_central(s, w1.letters());
    let (n2, mut c2) = split_central(s, w2.letters());
    c1.sort();
    c2.sort();
    if c1 != c2 || n1.len() != n2.len() {
        return None;
    }
    let len = n1.len();
    (0..len.max(1)).find_map(|k| {
        let matches = (0..len).all(|i| n1[(i + k) % len] == n2[i]);
        matches.then(|| TwistWord::new(n1[..k].iter().map(|l| (*l).clone()).collect()))
    })
}

fn is_cancellation(w1: &[Letter], w2: &[Letter]) -> bool {
    let (long, short) = if w1.len() == w2.len() + 2 {
        (w1, w2)
    } else if w2.len() == w1.len() + 2 {
        (w2, w1)
    } else {
        return false;
    };
    (0..long.len() - 1).any(|i| {
        long[i + 1] == long[i].inverse() && long[..i] == short[..i] && long[i + 2..] == short[i..]
    })
}

/// Result of checking one step of a derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepCheck {
    /// The step is an instance of the named move.
    pub combinatorial: bool,
    /// The two words agree on homology (up to the conjugation for
    /// rotations).
    pub homology: bool,
    /// For `auto`, the moves found by the search.
    pub path: Vec<Move>,
}

impl StepCheck {
    pub fn ok(&self) -> bool {
        self.combinatorial && self.homology
    }
}

fn homology_equal(s: &SurfaceModel, w1: &TwistWord, w2: &TwistWord) -> Result<bool, McgError> {
    Ok(homology_action(w1, s)? == homology_action(w2, s)?)
}

fn homology_conjugate(
    s: &SurfaceModel,
    w1: &TwistWord,
    w2: &TwistWord,
    u: &TwistWord,
) -> Result<bool, McgError> {
    // w2 = u^-1 w1 u
    let conj = u.inverse().concat(w1).concat(u);
    homology_equal(s, &conj, w2)
}

fn check_simple(
    s: &SurfaceModel,
    w1: &TwistWord,
    w2: &TwistWord,
    mv: &Move,
) -> Result<StepCheck, McgError> {
    let (a, b) = (w1.letters(), w2.letters());
    let combinatorial = a != b
        && match mv {
            Move::Relation(name) => one_rewrite(a, b, &relation_rules(s, name)?),
            Move::Braid => one_rewrite(a, b, &braid_rules(s)),
            Move::Commute => trace_equivalent(s, w1, w2),
            Move::Rotate => rotation_prefix(s, w1, w2).is_some(),
            Move::Cancel => is_cancellation(a, b),
            Move::Auto => unreachable!("handled by check_step"),
        };
    let homology = match (mv, rotation_prefix(s, w1, w2)) {
        (Move::Rotate, Some(u)) => homology_conjugate(s, w1, w2, &u)?,
        _ => homology_equal(s, w1, w2)?,
    };
    Ok(StepCheck {
        combinatorial,
        homology,
        path: vec![mv.clone()],
    })
}

pub fn check_step(
    s: &SurfaceModel,
    w1: &TwistWord,
    w2: &TwistWord,
    mv: &Move,
    depth: usize,
) -> Result<StepCheck, McgError> {
    s.check_word(w1)?;
    s.check_word(w2)?;
    if *mv != Move::Auto {
        return check_simple(s, w1, w2, mv);
    }
    if w1 == w2 {
        return Ok(StepCheck {
            combinatorial: false,
            homology: true,
            path: Vec::new(),
        });
    }
    match search(s, w1, w2, depth) {
        None => Ok(StepCheck {
            combinatorial: false,
            homology: homology_equal(s, w1, w2)?,
            path: Vec::new(),
        }),
        Some(path) => {
            let mut homology = true;
            let mut moves = Vec::with_capacity(path.len());
            for (mv, from, to) in &path {
                homology &= check_simple(s, from, to, mv)?.homology;
                moves.push(mv.clone());
            }
            Ok(StepCheck {
                combinatorial: true,
                homology,
                path: moves,
            })
        }
    }
}

fn neighbours(s: &SurfaceModel, rules: &[(Move, Rule)], w: &[Letter]) -> Vec<(Move, Vec<Letter>)> {
    let mut out = Vec::new();
    for (mv, rule) in rules {
        for v in rewrites(w, rule) {
            out.push((mv.clone(), v));
        }
    }
    for i in 0..w.len().saturating_sub(1) {
        if w[i] != w[i + 1] && s.commute(&w[i].curve, &w[i + 1].curve) {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push((Move::Commute, v));
        }
    }
    let central: Vec<Letter> = w
        .iter()
        .filter(|l| s.is_central(&l.curve))
        .cloned()
        .collect();
    let core: Vec<Letter> = w
        .iter()
        .filter(|l| !s.is_central(&l.curve))
        .cloned()
        .collect();
    if core.len() > 1 {
        for k in [1, core.len() - 1] {
            let mut v: Vec<Letter> = core[k..].iter().chain(&core[..k]).cloned().collect();
            v.extend(central.iter().cloned());
            if v[..] != w[..] {
                out.push((Move::Rotate, v));
            }
        }
    }
    for i in 0..w.len().saturating_sub(1) {
        if w[i + 1] == w[i].inverse() {
            let mut v = w[..i].to_vec();
            v.extend(w[i + 2..].iter().cloned());
            out.push((Move::Cancel, v));
        }
    }
    out
}

type Parents = HashMap<Vec<Letter>, Option<(Move, Vec<Letter>)>>;

/// Bidirectional breadth-first search for a chain of at most `depth` single
/// moves from `w1` to `w2`. Returns `(move, from, to)` triples.
pub fn search(
    s: &SurfaceModel,
    w1: &TwistWord,
    w2: &TwistWord,
    depth: usize,
) -> Option<Vec<(Move, TwistWord, TwistWord)>> {
    let rules = all_rules(s);
    let start = w1.letters().to_vec();
    let goal = w2.letters().to_vec();
    let mut fwd: Parents = HashMap::from([(start.clone(), None)]);
    let mut bwd: Parents = HashMap::from([(goal.clone(), None)]);
    let mut fq = VecDeque::from([start.clone()]);
    let mut bq = VecDeque::from([goal.clone()]);
    if start == goal {
        return Some(Vec::new());
    }
    let (mut df, mut db) = (0, 0);
    while df + db < depth {
        let forward = fq.len() <= bq.len();
        let (queue, seen, other) = if forward {
            (&mut fq, &mut fwd, &bwd)
        } else {
            (&mut bq, &mut bwd, &fwd)
        };
        let mut next = VecDeque::new();
        let mut meeting = None;
        'level: while let Some(w) = queue.pop_front() {
            for (mv, v) in neighbours(s, &rules, &w) {
                if seen.contains_key(&v) {
                    continue;
                }
                seen.insert(v.clone(), Some((mv, w.clone())));
                if other.contains_key(&v) {
                    meeting = Some(v);
                    break 'level;
                }
                next.push_back(v);
            }
        }
        if let Some(m) = meeting {
            return Some(assemble(&fwd, &bwd, m));
        }
        if next.is_empty() {
            return None;
        }
        *queue = next;
        if forward {
            df += 1;
        } else {
            db += 1;
        }
    }
    None
}

fn assemble(fwd: &Parents, bwd: &Parents, meet: Vec<Letter>) -> Vec<(Move, TwistWord, TwistWord)> {
    let mut head = Vec::new();
    let mut cur = meet.clone();
    while let Some(Some((mv, prev))) = fwd.get(&cur) {
        head.push((
            mv.clone(),
            TwistWord::new(prev.clone()),
            TwistWord::new(cur.clone()),
        ));
        cur = prev.clone();
    }
    head.reverse();
    let mut cur = meet;
    // backward parents record moves from the goal side; every move kind is
    // symmetric except cancellation, which is reversed into an insertion
    while let Some(Some((mv, prev))) = bwd.get(&cur) {
        head.push((
            mv.clone(),
            TwistWord::new(cur.clone()),
            TwistWord::new(prev.clone()),
        ));
        cur = prev.clone();
    }
    head
}
