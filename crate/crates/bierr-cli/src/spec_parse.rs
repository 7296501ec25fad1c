//! Parse distribution specifications of the form
//! `kind:key=value,key=value`, e.g. `normal:mu=0,sigma=1` or
//! `f:d1=10,d2=10,ncp=10`.

use std::collections::BTreeMap;

use bierr::DistributionSpec;

/// Supported kinds and their keys:
///
/// | kind       | mandatory      | optional            |
/// |------------|----------------|---------------------|
/// | `normal`   | `mu`, `sigma`  |                     |
/// | `t`        | `df`           | `mu` (0), `sigma` (1) |
/// | `f`        | `d1`, `d2`     | `ncp` (0)           |
/// | `cauchy`   | `mu`, `sigma`  |                     |
/// | `laplace`  | `mu`, `sigma`  |                     |
/// | `logistic` | `mu`, `sigma`  |                     |
pub fn parse_distribution_spec(text: &str) -> Result<DistributionSpec, String> {
    let text = text.trim();
    let (kind, rest) = match text.split_once(':') {
        Some((kind, rest)) => (kind.trim(), rest.trim()),
        None => (text, ""),
    };
    if kind.is_empty() {
        return Err("empty distribution kind".to_string());
    }

    let mut values: BTreeMap<String, f64> = BTreeMap::new();
    if !rest.is_empty() {
        for item in rest.split(',') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got '{item}'"))?;
            let key = key.trim().to_string();
            let parsed: f64 = value
                .trim()
                .parse()
                .map_err(|_| format!("invalid number for key '{key}': '{}'", value.trim()))?;
            values.insert(key, parsed);
        }
    }

    let mut take = |key: &str| values.remove(key);
    let mandatory = |taken: Option<f64>, key: &str, kind: &str| {
        taken.ok_or_else(|| format!("missing mandatory key '{key}' for {kind}"))
    };
    let positive_int = |value: f64, key: &str| -> Result<u32, String> {
        if value.fract() != 0.0 || !(1.0..=1e6).contains(&value) {
            return Err(format!(
                "key '{key}' must be a positive integer, got {value}"
            ));
        }
        Ok(value as u32)
    };

    let spec = match kind {
        "normal" => {
            let mu = mandatory(take("mu"), "mu", "normal")?;
            let sigma = mandatory(take("sigma"), "sigma", "normal")?;
            DistributionSpec::normal(mu, sigma)
        }
        "t" => {
            let df = positive_int(mandatory(take("df"), "df", "t")?, "df")?;
            let mu = take("mu").unwrap_or(0.0);
            let sigma = take("sigma").unwrap_or(1.0);
            DistributionSpec::student_t(mu, sigma, df)
        }
        "f" => {
            let d1 = positive_int(mandatory(take("d1"), "d1", "f")?, "d1")?;
            let d2 = positive_int(mandatory(take("d2"), "d2", "f")?, "d2")?;
            let ncp = take("ncp").unwrap_or(0.0);
            DistributionSpec::fisher_f(d1, d2, ncp)
        }
        "cauchy" => {
            let mu = mandatory(take("mu"), "mu", "cauchy")?;
            let sigma = mandatory(take("sigma"), "sigma", "cauchy")?;
            DistributionSpec::cauchy(mu, sigma)
        }
        "laplace" => {
            let mu = mandatory(take("mu"), "mu", "laplace")?;
            let sigma = mandatory(take("sigma"), "sigma", "laplace")?;
            DistributionSpec::laplace(mu, sigma)
        }
        "logistic" => {
            let mu = mandatory(take("mu"), "mu", "logistic")?;
            let sigma = mandatory(take("sigma"), "sigma", "logistic")?;
            DistributionSpec::logistic(mu, sigma)
        }
        other => {
            return Err(format!(
                "unknown distribution kind '{other}' (expected normal, t, f, cauchy, laplace, or logistic)"
            ))
        }
    };

    if let Some(stray) = values.keys().next() {
        return Err(format!("unknown key '{stray}' for {kind}"));
    }
    spec.map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_normal() {
        let spec = parse_distribution_spec("normal:mu=0,sigma=1").unwrap();
        assert_eq!(spec, DistributionSpec::normal(0.0, 1.0).unwrap());
    }

    #[test]
    fn parses_noncentral_f() {
        let spec = parse_distribution_spec("f:d1=2,d2=30,ncp=10").unwrap();
        assert_eq!(spec, DistributionSpec::fisher_f(2, 30, 10.0).unwrap());
        // ncp defaults to zero
        let central = parse_distribution_spec("f:d1=4,d2=6").unwrap();
        assert_eq!(central, DistributionSpec::fisher_f(4, 6, 0.0).unwrap());
    }

    #[test]
    fn parses_t_with_defaults() {
        let spec = parse_distribution_spec("t:df=9").unwrap();
        assert_eq!(spec, DistributionSpec::student_t(0.0, 1.0, 9).unwrap());
        let shifted = parse_distribution_spec("t:df=9,mu=1.5,sigma=2").unwrap();
        assert_eq!(shifted, DistributionSpec::student_t(1.5, 2.0, 9).unwrap());
    }

    #[test]
    fn distinct_error_messages() {
        let missing = parse_distribution_spec("normal:mu=0").unwrap_err();
        assert!(
            missing.contains("missing mandatory key 'sigma'"),
            "{missing}"
        );

        let unknown_kind = parse_distribution_spec("gamma:shape=1").unwrap_err();
        assert!(
            unknown_kind.contains("unknown distribution kind"),
            "{unknown_kind}"
        );

        let unknown_key = parse_distribution_spec("normal:mu=0,sigma=1,nu=3").unwrap_err();
        assert!(unknown_key.contains("unknown key 'nu'"), "{unknown_key}");

        let bad_number = parse_distribution_spec("normal:mu=abc,sigma=1").unwrap_err();
        assert!(bad_number.contains("invalid number"), "{bad_number}");

        let out_of_range = parse_distribution_spec("normal:mu=0,sigma=-1").unwrap_err();
        assert!(out_of_range.contains("positive"), "{out_of_range}");

        let fractional_df = parse_distribution_spec("t:df=2.5").unwrap_err();
        assert!(
            fractional_df.contains("positive integer"),
            "{fractional_df}"
        );
    }
}
