//! Text ingestion and serialization of preference data, following the
//! Preflib strict-order line shape: `#`-prefixed `KEY: VALUE` header lines,
//! then one ballot per line as `multiplicity: id,id,...` with 1-based
//! candidate ids.
//!
//! Rankings inside a file may be incomplete; the parser either drops them
//! (reporting how many voters were discarded) or rejects the file, depending
//! on the chosen policy. Tied groups in braces are always rejected: the
//! profile model is strict orders only.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::profile::{Ballot, Candidate, Profile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("no alternatives declared in the header")]
    NoAlternatives,
    #[error("line {line}: alternative id {id} must be in 1..={count}")]
    BadAlternativeId { line: usize, id: u64, count: usize },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: multiplicity must be a positive integer")]
    NonPositiveMultiplicity { line: usize },
    #[error("line {line}: unknown candidate id {id}")]
    UnknownCandidate { line: usize, id: u64 },
    #[error("line {line}: candidate id {id} repeated within one ballot")]
    RepeatedCandidate { line: usize, id: u64 },
    #[error("line {line}: tied groups are not supported, rankings must be strict")]
    TiedBallot { line: usize },
    #[error("line {line}: ballot ranks {got} of {expected} candidates")]
    IncompleteBallot {
        line: usize,
        got: usize,
        expected: usize,
    },
    #[error("no complete ballots survive parsing")]
    NoBallots,
    #[error(transparent)]
    Profile(#[from] crate::error::Error),
}

/// What to do with ballots that rank fewer than m candidates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Policy {
    /// Any incomplete ballot is an error.
    StrictComplete,
    /// Incomplete ballots are discarded; the dropped voter count is reported.
    DropIncomplete,
}

/// One ballot line as written in the file, before filtering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RawBallotLine {
    pub line: usize,
    pub multiplicity: u64,
    /// 1-based candidate ids in preference order; possibly incomplete.
    pub ids: Vec<u64>,
}

/// The file as read: header metadata, declared alternatives, ballot lines.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RawElection {
    /// `KEY: VALUE` pairs from `#` lines, in file order.
    pub metadata: Vec<(String, String)>,
    /// Declared alternatives, 1-based id to display name.
    pub names: BTreeMap<u64, String>,
    pub lines: Vec<RawBallotLine>,
}

impl RawElection {
    pub fn alternative_count(&self) -> usize {
        self.names.len()
    }
}

/// Result of parsing one file under a policy.
#[derive(Clone, Debug)]
pub struct ParseOutcome {
    /// Canonicalized profile over the complete ballots.
    pub profile: Profile,
    pub raw: RawElection,
    /// Voters whose incomplete ballots were dropped (zero under strict).
    pub discarded_voters: u64,
}

fn parse_header_line(
    line_no: usize,
    body: &str,
    declared: &mut Option<usize>,
    names: &mut BTreeMap<u64, String>,
    metadata: &mut Vec<(String, String)>,
) -> Result<(), ParseError> {
    let Some((key, value)) = body.split_once(':') else {
        // Free-form comment; keep it as a key with no value.
        if !body.trim().is_empty() {
            metadata.push((body.trim().to_string(), String::new()));
        }
        return Ok(());
    };
    let key = key.trim();
    let value = value.trim();
    metadata.push((key.to_string(), value.to_string()));
    let upper = key.to_ascii_uppercase();
    if upper == "NUMBER ALTERNATIVES" {
        let count: usize = value.parse().map_err(|_| ParseError::Malformed {
            line: line_no,
            reason: format!("bad alternative count '{value}'"),
        })?;
        *declared = Some(count);
    } else if let Some(id_text) = upper.strip_prefix("ALTERNATIVE NAME") {
        let id: u64 = id_text.trim().parse().map_err(|_| ParseError::Malformed {
            line: line_no,
            reason: format!("bad alternative id in '{key}'"),
        })?;
        names.insert(id, value.to_string());
    }
    Ok(())
}

fn parse_ballot_line(line_no: usize, text: &str) -> Result<RawBallotLine, ParseError> {
    if text.contains('{') || text.contains('}') {
        return Err(ParseError::TiedBallot { line: line_no });
    }
    let (mult_text, ids_text) = text.split_once(':').ok_or_else(|| ParseError::Malformed {
        line: line_no,
        reason: "expected 'multiplicity: id,id,...'".to_string(),
    })?;
    let multiplicity: i64 = mult_text
        .trim()
        .parse()
        .map_err(|_| ParseError::Malformed {
            line: line_no,
            reason: format!("bad multiplicity '{}'", mult_text.trim()),
        })?;
    if multiplicity <= 0 {
        return Err(ParseError::NonPositiveMultiplicity { line: line_no });
    }
    let mut ids = Vec::new();
    for part in ids_text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(ParseError::Malformed {
                line: line_no,
                reason: "empty candidate id".to_string(),
            });
        }
        let id: u64 = part.parse().map_err(|_| ParseError::Malformed {
            line: line_no,
            reason: format!("bad candidate id '{part}'"),
        })?;
        ids.push(id);
    }
    Ok(RawBallotLine {
        line: line_no,
        multiplicity: multiplicity as u64,
        ids,
    })
}

/// Parses one election file. Header lines must declare the alternatives
/// before the first ballot line; duplicate identical rankings are merged.
pub fn parse_election(text: &str, policy: Policy) -> Result<ParseOutcome, ParseError> {
    let mut metadata = Vec::new();
    let mut names: BTreeMap<u64, String> = BTreeMap::new();
    let mut declared: Option<usize> = None;
    let mut lines = Vec::new();

    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(body) = line.strip_prefix('#') {
            parse_header_line(line_no, body, &mut declared, &mut names, &mut metadata)?;
        } else {
            lines.push(parse_ballot_line(line_no, line)?);
        }
    }

    let m = declared.unwrap_or(names.len());
    if m == 0 {
        return Err(ParseError::NoAlternatives);
    }
    for &id in names.keys() {
        if id == 0 || id > m as u64 {
            return Err(ParseError::BadAlternativeId {
                line: 0,
                id,
                count: m,
            });
        }
    }
    // Alternatives without a name line display as their id.
    for id in 1..=m as u64 {
        names.entry(id).or_insert_with(|| id.to_string());
    }

    let mut discarded: u64 = 0;
    let mut complete: Vec<(u64, Vec<Candidate>)> = Vec::new();
    for ballot in &lines {
        let mut seen = vec![false; m];
        for &id in &ballot.ids {
            if id == 0 || id > m as u64 {
                return Err(ParseError::UnknownCandidate {
                    line: ballot.line,
                    id,
                });
            }
            if seen[id as usize - 1] {
                return Err(ParseError::RepeatedCandidate {
                    line: ballot.line,
                    id,
                });
            }
            seen[id as usize - 1] = true;
        }
        if ballot.ids.len() < m {
            match policy {
                Policy::StrictComplete => {
                    return Err(ParseError::IncompleteBallot {
                        line: ballot.line,
                        got: ballot.ids.len(),
                        expected: m,
                    })
                }
                Policy::DropIncomplete => {
                    discarded += ballot.multiplicity;
                    continue;
                }
            }
        }
        complete.push((
            ballot.multiplicity,
            ballot.ids.iter().map(|&id| Candidate(id as usize - 1)).collect(),
        ));
    }
    if complete.is_empty() {
        return Err(ParseError::NoBallots);
    }

    let name_table: Vec<String> = (1..=m as u64).map(|id| names[&id].clone()).collect();
    let ballots = complete
        .into_iter()
        .map(|(weight, ranking)| Ballot { weight, ranking })
        .collect();
    let profile = Profile::new(name_table, ballots)?.canonicalize();
    Ok(ParseOutcome {
        profile,
        raw: RawElection {
            metadata,
            names,
            lines,
        },
        discarded_voters: discarded,
    })
}

/// Canonical serialization: alternative count and names, voter count, then
/// ballots sorted lexicographically with merged multiplicities. Line-feed
/// endings throughout; parsing the output reproduces the profile exactly.
pub fn serialize_profile(profile: &Profile) -> String {
    let canon = profile.canonicalize();
    let mut out = String::new();
    let _ = writeln!(out, "# NUMBER ALTERNATIVES: {}", canon.candidate_count());
    for (i, name) in canon.names().iter().enumerate() {
        let _ = writeln!(out, "# ALTERNATIVE NAME {}: {}", i + 1, name);
    }
    let _ = writeln!(out, "# NUMBER VOTERS: {}", canon.voter_count());
    for ballot in canon.ballots() {
        let ids: Vec<String> = ballot
            .ranking
            .iter()
            .map(|c| (c.0 + 1).to_string())
            .collect();
        let _ = writeln!(out, "{}: {}", ballot.weight, ids.join(","));
    }
    out
}

/// Party labels for candidates; pairs with a missing label are never treated
/// as same-party.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PartyMap {
    labels: BTreeMap<Candidate, String>,
}

/// Relation of a pair under a party map.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartyRelation {
    Same,
    Cross,
    Unknown,
}

impl PartyRelation {
    pub fn name(self) -> &'static str {
        match self {
            PartyRelation::Same => "same",
            PartyRelation::Cross => "cross",
            PartyRelation::Unknown => "unknown",
        }
    }
}

impl PartyMap {
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, c: Candidate) -> Option<&str> {
        self.labels.get(&c).map(String::as_str)
    }

    pub fn relation(&self, x: Candidate, y: Candidate) -> PartyRelation {
        match (self.labels.get(&x), self.labels.get(&y)) {
            (Some(a), Some(b)) if a == b => PartyRelation::Same,
            (Some(_), Some(_)) => PartyRelation::Cross,
            _ => PartyRelation::Unknown,
        }
    }
}

/// Builds a party map from sidecar text with one `id: label` line per
/// candidate (1-based file ids, `#` comments allowed). Labels are trimmed and
/// compared by exact equality.
pub fn attach_parties(raw: &RawElection, source: &str) -> Result<PartyMap, ParseError> {
    let count = raw.alternative_count();
    let mut labels = BTreeMap::new();
    for (i, raw_line) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (id_text, label) = line.split_once(':').ok_or_else(|| ParseError::Malformed {
            line: line_no,
            reason: "expected 'id: party'".to_string(),
        })?;
        let id: u64 = id_text.trim().parse().map_err(|_| ParseError::Malformed {
            line: line_no,
            reason: format!("bad candidate id '{}'", id_text.trim()),
        })?;
        if id == 0 || id > count as u64 {
            return Err(ParseError::UnknownCandidate { line: line_no, id });
        }
        labels.insert(Candidate(id as usize - 1), label.trim().to_string());
    }
    Ok(PartyMap { labels })
}

/// Builds a party map from `PARTY <id>` header metadata, if present.
pub fn parties_from_metadata(raw: &RawElection) -> Result<PartyMap, ParseError> {
    let count = raw.alternative_count();
    let mut labels = BTreeMap::new();
    for (key, value) in &raw.metadata {
        let upper = key.to_ascii_uppercase();
        if let Some(id_text) = upper.strip_prefix("PARTY") {
            let Ok(id) = id_text.trim().parse::<u64>() else {
                continue;
            };
            if id == 0 || id > count as u64 {
                return Err(ParseError::UnknownCandidate { line: 0, id });
            }
            labels.insert(Candidate(id as usize - 1), value.trim().to_string());
        }
    }
    Ok(PartyMap { labels })
}
