//! Polygon file parsing.
//!
//! Two formats, auto-detected: one vertex per line as two whitespace
//! separated integers, with `#` starting a comment and blank lines ignored;
//! or, when the first non-whitespace character is `[`, a JSON array of
//! `[x, y]` integer pairs. The parsed vertices must validate as a strictly
//! convex polygon; clockwise input is reversed and reported.

use kgon::{validate, ConvexPolygon, Point2};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Geometry(#[from] kgon::Error),
}

#[derive(Debug, Clone)]
pub struct ParsedPolygon {
    pub polygon: ConvexPolygon,
    /// True when the input was clockwise and has been reversed.
    pub reversed: bool,
}

pub fn parse_polygon(text: &str) -> Result<ParsedPolygon, ParseError> {
    let points = if text.trim_start().starts_with('[') {
        parse_json(text)?
    } else {
        parse_lines(text)?
    };
    let validated = validate(&points)?;
    Ok(ParsedPolygon {
        polygon: validated.polygon,
        reversed: validated.reversed,
    })
}

fn parse_lines(text: &str) -> Result<Vec<Point2>, ParseError> {
    let mut points = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(first) = tokens.next() else {
            continue;
        };
        let second = tokens.next().ok_or_else(|| ParseError::Syntax {
            line,
            message: "expected two integers, got one".to_string(),
        })?;
        if let Some(extra) = tokens.next() {
            return Err(ParseError::Syntax {
                line,
                message: format!("unexpected trailing token {extra:?}"),
            });
        }
        let parse = |token: &str| {
            token.parse::<i64>().map_err(|e| ParseError::Syntax {
                line,
                message: format!("bad integer {token:?}: {e}"),
            })
        };
        points.push(Point2::new(parse(first)?, parse(second)?));
    }
    Ok(points)
}

fn parse_json(text: &str) -> Result<Vec<Point2>, ParseError> {
    serde_json::from_str::<Vec<Point2>>(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        message: e.to_string(),
    })
}
