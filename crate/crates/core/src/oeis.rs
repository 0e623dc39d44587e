//! Client for the On-Line Encyclopedia of Integer Sequences search API.
//!
//! Live lookups are opt-in; tests and CI parse recorded response bodies
//! instead. Whether a sequence is present in the database is a
//! time-dependent fact, so callers report lookup outcomes rather than
//! asserting them.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Environment variable overriding the endpoint, e.g. for a local fixture
/// server.
pub const BASE_URL_ENV: &str = "CSZ_OEIS_BASE_URL";

const DEFAULT_BASE_URL: &str = "https://oeis.org";

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("empty term list")]
    EmptyTerms,
    #[error("network error (retriable): {0}")]
    Network(String),
    #[error("http status {0}")]
    Status(u16),
    #[error("malformed response: {reason}; payload starts {excerpt:?}")]
    Parse { reason: String, excerpt: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatchMode {
    /// Accept any sequence containing the terms contiguously (the search
    /// endpoint's native behavior).
    Subsequence,
    /// Additionally require the sequence to start with the terms.
    Prefix,
}

/// Terms to look up, at least one. Eight or more give usable selectivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceQuery {
    terms: Vec<u64>,
    match_mode: MatchMode,
}

impl SequenceQuery {
    pub fn new(terms: Vec<u64>, match_mode: MatchMode) -> Result<Self, OeisError> {
        if terms.is_empty() {
            return Err(OeisError::EmptyTerms);
        }
        Ok(SequenceQuery { terms, match_mode })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn match_mode(&self) -> MatchMode {
        self.match_mode
    }

    /// Comma-joined decimal terms, the `q=` payload.
    pub fn terms_string(&self) -> String {
        self.terms.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

/// One search hit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceMatch {
    /// A-number, e.g. "A000290".
    pub id: String,
    pub number: u64,
    pub name: String,
    /// Leading terms as stored by the database, when present.
    pub data: Option<String>,
}

pub struct OeisClient {
    base_url: String,
    agent: ureq::Agent,
    min_interval: Duration,
    last_request: Option<Instant>,
}

impl Default for OeisClient {
    fn default() -> Self {
        Self::new()
    }
}

impl OeisClient {
    /// Endpoint from the environment override when set, the public
    /// database otherwise.
    pub fn new() -> Self {
        let base_url =
            std::env::var(BASE_URL_ENV).unwrap_or_else(|_| DEFAULT_BASE_URL.to_string());
        Self::with_base_url(base_url)
    }

    pub fn with_base_url(base_url: String) -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(Duration::from_secs(30)))
            .build()
            .new_agent();
        OeisClient {
            base_url: base_url.trim_end_matches('/').to_string(),
            agent,
            min_interval: Duration::from_secs(1),
            last_request: None,
        }
    }

    /// The exact request URL for a query; identical terms give an
    /// identical URL.
    pub fn request_url(&self, query: &SequenceQuery) -> String {
        format!("{}/search?q={}&fmt=json", self.base_url, query.terms_string())
    }

    /// Performs a live lookup, waiting out the politeness interval first.
    pub fn query_sequence(&mut self, query: &SequenceQuery) -> Result<Vec<SequenceMatch>, OeisError> {
        if let Some(last) = self.last_request {
            let elapsed = last.elapsed();
            if elapsed < self.min_interval {
                std::thread::sleep(self.min_interval - elapsed);
            }
        }
        let url = self.request_url(query);
        self.last_request = Some(Instant::now());
        let mut response = self.agent.get(&url).call().map_err(|e| match e {
            ureq::Error::StatusCode(code) => OeisError::Status(code),
            other => OeisError::Network(other.to_string()),
        })?;
        let body = response
            .body_mut()
            .read_to_string()
            .map_err(|e| OeisError::Network(e.to_string()))?;
        parse_response(&body, query)
    }
}

#[derive(Deserialize)]
struct RawResult {
    number: u64,
    name: Option<String>,
    data: Option<String>,
}

#[derive(Deserialize)]
struct RawEnvelope {
    results: Option<Vec<RawResult>>,
}

fn excerpt(body: &str) -> String {
    body.chars().take(80).collect()
}

/// Parses a search response body. Accepts the documented envelope shape
/// `{"results": [...]}` (with `null` for no hits) and, for compatibility
/// with the live service, a bare top-level array.
pub fn parse_response(body: &str, query: &SequenceQuery) -> Result<Vec<SequenceMatch>, OeisError> {
    let raw: Vec<RawResult> = if body.trim_start().starts_with('[') {
        serde_json::from_str(body).map_err(|e| OeisError::Parse {
            reason: e.to_string(),
            excerpt: excerpt(body),
        })?
    } else {
        let envelope: RawEnvelope = serde_json::from_str(body).map_err(|e| OeisError::Parse {
            reason: e.to_string(),
            excerpt: excerpt(body),
        })?;
        envelope.results.unwrap_or_default()
    };

    let wanted: Vec<String> = query.terms().iter().map(u64::to_string).collect();
    let matches = raw
        .into_iter()
        .filter(|r| match query.match_mode() {
            MatchMode::Subsequence => true,
            MatchMode::Prefix => r.data.as_deref().is_some_and(|data| {
                let tokens: Vec<&str> = data.split(',').map(str::trim).collect();
                tokens.len() >= wanted.len()
                    && tokens.iter().zip(&wanted).all(|(t, w)| *t == w)
            }),
        })
        .map(|r| SequenceMatch {
            id: format!("A{:06}", r.number),
            number: r.number,
            name: r.name.unwrap_or_default(),
            data: r.data,
        })
        .collect();
    Ok(matches)
}
