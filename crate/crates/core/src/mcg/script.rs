//! Derivation scripts.
//!
//! ```text
//! # comment
//! surface n-family 3
//! word alpha2 gamma^2 beta^2 alpha1 delta1
//! move gamma-beta
//! word alpha2 gamma beta alpha1 beta alpha1 delta1
//! ```

use super::action::{compare_on_homology, HomologyVerdict};
use super::rewrite::{check_step, Move, StepCheck, DEFAULT_REWRITE_DEPTH};
use super::{McgError, SurfaceModel, TwistWord};

#[derive(Debug, Clone)]
pub struct Derivation {
    pub surface: SurfaceModel,
    pub steps: Vec<TwistWord>,
    pub moves: Vec<Move>,
    /// Script line of each word, for diagnostics.
    pub lines: Vec<usize>,
}

impl Derivation {
    pub fn new(surface: SurfaceModel, steps: Vec<TwistWord>, moves: Vec<Move>) -> Self {
        let lines = vec![0; steps.len()];
        Derivation {
            surface,
            steps,
            moves,
            lines,
        }
    }
}

pub fn parse_script(text: &str) -> Result<Derivation, McgError> {
    let mut surface = None;
    let mut steps: Vec<TwistWord> = Vec::new();
    let mut moves: Vec<Move> = Vec::new();
    let mut lines = Vec::new();
    let mut expect_word = true;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| McgError::Script { line, message };
        let (head, rest) = content
            .split_once(char::is_whitespace)
            .unwrap_or((content, ""));
        let rest = rest.trim();
        match head {
            "surface" => {
                if surface.is_some() {
                    return Err(err("duplicate `surface` line".into()));
                }
                surface = Some(SurfaceModel::by_name(rest).map_err(|e| err(e.to_string()))?);
            }
            "word" => {
                let Some(s) = &surface else {
                    return Err(err("`word` before `surface`".into()));
                };
                if !expect_word {
                    return Err(err("two `word` lines without a `move` between them".into()));
                }
                let w = TwistWord::parse(rest).map_err(|e| err(e.to_string()))?;
                s.check_word(&w).map_err(|e| err(e.to_string()))?;
                steps.push(w);
                lines.push(line);
                expect_word = false;
            }
            "move" => {
                if surface.is_none() {
                    return Err(err("`move` before `surface`".into()));
                }
                if expect_word {
                    return Err(err("`move` must follow a `word` line".into()));
                }
                let name = rest
                    .split_whitespace()
                    .next()
                    .ok_or_else(|| err("`move` needs a name".into()))?;
                let mv = Move::parse(name);
                if let Move::Relation(r) = &mv {
                    if surface.as_ref().unwrap().relation(r).is_none() {
                        return Err(err(format!("unknown move `{r}`")));
                    }
                }
                moves.push(mv);
                expect_word = true;
            }
            other => return Err(err(format!("unknown statement `{other}`"))),
        }
    }
    let surface = surface.ok_or(McgError::Script {
        line: 0,
        message: "missing `surface` line".into(),
    })?;
    if expect_word && !moves.is_empty() {
        return Err(McgError::Script {
            line: text.lines().count(),
            message: "script ends with a `move`".into(),
        });
    }
    if steps.len() < 2 {
        return Err(McgError::Script {
            line: 0,
            message: "a derivation needs at least two words".into(),
        });
    }
    Ok(Derivation {
        surface,
        steps,
        moves,
        lines,
    })
}

#[derive(Debug, Clone)]
pub struct StepReport {
    pub index: usize,
    pub mv: Move,
    pub check: StepCheck,
}

#[derive(Debug, Clone)]
pub struct DerivationVerdict {
    pub valid: bool,
    /// Index (into the word list) of the target word of the first failing
    /// step.
    pub failing_step: Option<usize>,
    pub reason: Option<String>,
    pub steps: Vec<StepReport>,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub rewrite_depth: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            rewrite_depth: DEFAULT_REWRITE_DEPTH,
        }
    }
}

pub fn verify_derivation(
    d: &Derivation,
    opts: &VerifyOptions,
) -> Result<DerivationVerdict, McgError> {
    if d.steps.len() < 2 {
        return Err(McgError::Script {
            line: 0,
            message: "a derivation needs at least two words".into(),
        });
    }
    if d.moves.len() + 1 != d.steps.len() {
        return Err(McgError::Script {
            line: 0,
            message: "expected one move between consecutive words".into(),
        });
    }
    let mut steps = Vec::with_capacity(d.moves.len());
    let mut failing = None;
    let mut reason = None;
    for (i, mv) in d.moves.iter().enumerate() {
        let check = check_step(
            &d.surface,
            &d.steps[i],
            &d.steps[i + 1],
            mv,
            opts.rewrite_depth,
        )?;
        if failing.is_none() && !check.ok() {
            failing = Some(i + 1);
            reason = Some(if !check.combinatorial {
                format!(
                    "`{}` -> `{}` is not a single `{mv}` move",
                    d.steps[i],
                    d.steps[i + 1]
                )
            } else {
                format!(
                    "`{}` -> `{}` changes the homology action",
                    d.steps[i],
                    d.steps[i + 1]
                )
            });
        }
        steps.push(StepReport {
            index: i + 1,
            mv: mv.clone(),
            check,
        });
    }
    Ok(DerivationVerdict {
        valid: failing.is_none(),
        failing_step: failing,
        reason,
        steps,
    })
}

#[derive(Debug, Clone)]
pub struct SquareVerdict {
    pub homology: HomologyVerdict,
    pub script: Option<DerivationVerdict>,
}

impl SquareVerdict {
    pub fn valid(&self) -> bool {
        self.homology.is_equal() && self.script.as_ref().is_none_or(|v| v.valid)
    }
}

/// Compares `w w` with `target` on homology and, when a reduction script is
/// given, checks that it starts at `w w`, ends at `target` and verifies.
pub fn check_square_identity(
    w: &TwistWord,
    target: &TwistWord,
    s: &SurfaceModel,
    script: Option<&Derivation>,
    opts: &VerifyOptions,
) -> Result<SquareVerdict, McgError> {
    let square = w.concat(w);
    let homology = compare_on_homology(&square, target, s)?;
    let script = match script {
        None => None,
        Some(d) => {
            let mut v = verify_derivation(d, opts)?;
            if d.steps.first() != Some(&square) {
                v.valid = false;
                v.failing_step.get_or_insert(0);
                v.reason
                    .get_or_insert_with(|| "script does not start at the square".into());
            } else if d.steps.last() != Some(target) {
                v.valid = false;
                v.failing_step.get_or_insert(d.steps.len() - 1);
                v.reason
                    .get_or_insert_with(|| "script does not end at the target".into());
            }
            Some(v)
        }
    };
    Ok(SquareVerdict { homology, script })
}
