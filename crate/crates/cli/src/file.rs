//! Text format for codebooks and code specs.
//!
//! ```text
//! # rmcodes codebook v1
//! # metric=kendall
//! # construction=c1
//! # n=6
//! # k=4
//! # d=3
//! # r=2
//! # m=5
//! # order=lex
//! 1 2 3 4 5 6
//! ...
//! ```
//!
//! A spec file starts with `# rmcodes spec v1` and has the same header but no
//! body. Construction parameters sit between `d` and `order`.

use std::fmt::Write as _;

use rmcodes::{ConstructionId, Metric, Permutation};

pub const CODEBOOK_MAGIC: &str = "# rmcodes codebook v1";
pub const SPEC_MAGIC: &str = "# rmcodes spec v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub metric: Metric,
    pub construction: ConstructionId,
    pub n: usize,
    pub k: usize,
    pub d: u64,
    pub params: Vec<(String, String)>,
}

impl Header {
    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Parses a required numeric construction parameter.
    pub fn param_num<T: std::str::FromStr>(&self, key: &str) -> Result<T, String> {
        let raw = self
            .param(key)
            .ok_or_else(|| format!("header is missing {key}= for {}", self.construction))?;
        raw.parse().map_err(|_| format!("header value {key}={raw} is not a number"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeFile {
    Codebook(Header, Vec<Permutation>),
    Spec(Header),
}

impl CodeFile {
    pub fn header(&self) -> &Header {
        match self {
            CodeFile::Codebook(h, _) | CodeFile::Spec(h) => h,
        }
    }
}

fn write_header(out: &mut String, magic: &str, h: &Header) {
    let _ = writeln!(out, "{magic}");
    let _ = writeln!(out, "# metric={}", h.metric.as_str());
    let _ = writeln!(out, "# construction={}", h.construction);
    let _ = writeln!(out, "# n={}", h.n);
    let _ = writeln!(out, "# k={}", h.k);
    let _ = writeln!(out, "# d={}", h.d);
    for (key, value) in &h.params {
        let _ = writeln!(out, "# {key}={value}");
    }
    let _ = writeln!(out, "# order=lex");
}

pub fn render_codebook(h: &Header, words: &[Permutation]) -> String {
    let mut out = String::new();
    write_header(&mut out, CODEBOOK_MAGIC, h);
    for w in words {
        let _ = writeln!(out, "{w}");
    }
    out
}

pub fn render_spec(h: &Header) -> String {
    let mut out = String::new();
    write_header(&mut out, SPEC_MAGIC, h);
    out
}

pub fn parse(text: &str) -> Result<CodeFile, String> {
    let mut lines = text.lines().enumerate();
    let is_spec = match lines.next() {
        Some((_, l)) if l.trim_end() == CODEBOOK_MAGIC => false,
        Some((_, l)) if l.trim_end() == SPEC_MAGIC => true,
        _ => return Err(format!("first line must be {CODEBOOK_MAGIC:?} or {SPEC_MAGIC:?}")),
    };
    let mut fields: Vec<(String, String)> = Vec::new();
    let mut words = Vec::new();
    for (i, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if !words.is_empty() {
                return Err(format!("line {}: header line after codewords", i + 1));
            }
            let (key, value) = rest
                .trim()
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected `# key=value`", i + 1))?;
            fields.push((key.trim().to_string(), value.trim().to_string()));
            continue;
        }
        if is_spec {
            return Err(format!("line {}: spec files carry no codewords", i + 1));
        }
        let w: Permutation = line.parse().map_err(|e| format!("line {}: {e}", i + 1))?;
        words.push(w);
    }

    let mut take = |key: &str| -> Result<String, String> {
        let pos = fields
            .iter()
            .position(|(k, _)| k == key)
            .ok_or_else(|| format!("header is missing {key}="))?;
        Ok(fields.remove(pos).1)
    };
    let num = |key: &str, v: String| -> Result<u64, String> {
        v.parse().map_err(|_| format!("header value {key}={v} is not a number"))
    };
    let metric: Metric = take("metric")?.parse().map_err(|e| format!("{e}"))?;
    let construction: ConstructionId = take("construction")?.parse().map_err(|e| format!("{e}"))?;
    let n = num("n", take("n")?)? as usize;
    let k = num("k", take("k")?)? as usize;
    let d = num("d", take("d")?)?;
    let order = take("order")?;
    if order != "lex" {
        return Err(format!("unsupported order={order}"));
    }
    let header = Header {
        metric,
        construction,
        n,
        k,
        d,
        params: fields,
    };
    if let Some(bad) = words.iter().find(|w| w.len() != n) {
        return Err(format!("codeword {bad} does not have length {n}"));
    }
    Ok(if is_spec {
        CodeFile::Spec(header)
    } else {
        CodeFile::Codebook(header, words)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn header() -> Header {
        Header {
            metric: Metric::Kendall,
            construction: ConstructionId::C1,
            n: 6,
            k: 4,
            d: 3,
            params: vec![("r".into(), "2".into()), ("m".into(), "5".into())],
        }
    }

    #[test]
    fn codebook_round_trip() {
        let words = vec!["4 1 3 5 6 2".parse().unwrap(), "1 2 3 4 5 6".parse().unwrap()];
        let text = render_codebook(&header(), &words);
        assert!(text.starts_with("# rmcodes codebook v1\n# metric=kendall\n"));
        assert!(text.contains("# m=5\n# order=lex\n4 1 3 5 6 2\n"));
        assert_eq!(parse(&text).unwrap(), CodeFile::Codebook(header(), words));
    }

    #[test]
    fn spec_round_trip() {
        let text = render_spec(&header());
        assert_eq!(parse(&text).unwrap(), CodeFile::Spec(header()));
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(parse("hello\n").is_err());
        assert!(parse("# rmcodes codebook v1\n# metric=kendall\n").is_err());
        let good = render_codebook(&header(), &[]);
        assert!(parse(&good.replace("order=lex", "order=gray")).is_err());
        assert!(parse(&format!("{good}1 2 3\n")).is_err());
        assert!(parse(&format!("{good}1 1 2 3 4 5\n")).is_err());
        assert!(parse(&format!("{}1 2 3 4 5 6\n", render_spec(&header()))).is_err());
    }
}
