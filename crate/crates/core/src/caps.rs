//! Search caps shared by the pipeline, overridable from a `key=value,...` string.

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest dilation tried by `smallest_good_multiple`.
    pub saturation: u32,
    /// Largest number of stellar insertions in a resolution.
    pub resolution: usize,
    /// Largest multiple sampled for section counts.
    pub m_max: u64,
    /// Largest exponent per prime in integral-point enumeration.
    pub exponent: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            saturation: 24,
            resolution: crate::resolve::DEFAULT_INSERTION_CAP,
            m_max: crate::sections::DEFAULT_M_MAX,
            exponent: crate::heights::DEFAULT_EXPONENT_CAP,
        }
    }
}

impl Caps {
    pub const KEYS: [&'static str; 4] = ["saturation", "resolution", "m_max", "exponent"];

    /// Sets one cap. Returns `Ok(false)` when `key` is not a cap.
    pub fn set(&mut self, key: &str, value: &str) -> Result<bool, Error> {
        let parse = |v: &str| -> Result<u64, Error> {
            match v.trim().parse::<u64>() {
                Ok(n) if n > 0 => Ok(n),
                _ => Err(Error::InvalidOption(format!("{key} must be a positive integer, got {v:?}"))),
            }
        };
        let small = |n: u64| u32::try_from(n).map_err(|_| Error::InvalidOption(format!("{key} is too large")));
        match key {
            "saturation" => self.saturation = small(parse(value)?)?,
            "resolution" => {
                self.resolution = usize::try_from(parse(value)?).map_err(|_| Error::InvalidOption(format!("{key} is too large")))?
            }
            "m_max" => self.m_max = parse(value)?,
            "exponent" => self.exponent = small(parse(value)?)?,
            _ => return Ok(false),
        }
        Ok(true)
    }

    /// Applies a comma-separated `key=value` list; every key must be a cap.
    pub fn apply_overrides(&mut self, spec: &str) -> Result<(), Error> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) =
                item.split_once('=').ok_or_else(|| Error::InvalidOption(format!("expected key=value, got {item:?}")))?;
            if !self.set(k.trim(), v)? {
                return Err(Error::InvalidOption(format!("unknown cap {:?}", k.trim())));
            }
        }
        Ok(())
    }

    pub fn from_overrides(spec: &str) -> Result<Self, Error> {
        let mut caps = Caps::default();
        caps.apply_overrides(spec)?;
        Ok(caps)
    }
}
