#![allow(dead_code)]

use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(self.stdout.trim()).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

pub fn levelcurves(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_levelcurves"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn schema() -> Value {
    let text = include_str!("../../reports.schema.json");
    serde_json::from_str(text).unwrap()
}

/// Validates `v` against the subset of JSON Schema used by
/// `reports.schema.json`: `$ref`, `oneOf`, `type`, `enum`, `const`,
/// `required`, `properties`, `additionalProperties: false`, `items` and
/// `minimum`.
pub fn validate(v: &Value) -> Result<(), String> {
    let root = schema();
    check(&root, &root, v, "$")
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "number" => v.is_number(),
        "integer" => v.is_i64() || v.is_u64(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        other => panic!("unsupported type {other}"),
    }
}

fn check(root: &Value, s: &Value, v: &Value, path: &str) -> Result<(), String> {
    let obj = s.as_object().expect("schema object");
    for key in obj.keys() {
        let known = [
            "$schema", "$id", "$defs", "$ref", "title", "description", "oneOf", "type", "enum",
            "const", "required", "properties", "additionalProperties", "items", "minimum",
        ];
        assert!(known.contains(&key.as_str()), "unsupported keyword {key}");
    }
    if let Some(r) = obj.get("$ref") {
        let name = r.as_str().unwrap().strip_prefix("#/$defs/").expect("local ref");
        check(root, &root["$defs"][name], v, path)?;
    }
    if let Some(alts) = obj.get("oneOf") {
        let ok = alts
            .as_array()
            .unwrap()
            .iter()
            .filter(|a| check(root, a, v, path).is_ok())
            .count();
        if ok != 1 {
            return Err(format!("{path}: {ok} oneOf branches match"));
        }
    }
    if let Some(t) = obj.get("type") {
        let ok = match t {
            Value::String(t) => type_matches(t, v),
            Value::Array(ts) => ts.iter().any(|t| type_matches(t.as_str().unwrap(), v)),
            _ => panic!("bad type"),
        };
        if !ok {
            return Err(format!("{path}: expected type {t}, found {v}"));
        }
    }
    if let Some(e) = obj.get("enum") {
        if !e.as_array().unwrap().contains(v) {
            return Err(format!("{path}: {v} not in {e}"));
        }
    }
    if let Some(c) = obj.get("const") {
        if c != v {
            return Err(format!("{path}: expected {c}, found {v}"));
        }
    }
    if let (Some(m), Some(x)) = (obj.get("minimum"), v.as_f64()) {
        if x < m.as_f64().unwrap() {
            return Err(format!("{path}: {x} below {m}"));
        }
    }
    if let Value::Object(map) = v {
        if let Some(req) = obj.get("required") {
            for k in req.as_array().unwrap() {
                if !map.contains_key(k.as_str().unwrap()) {
                    return Err(format!("{path}: missing {k}"));
                }
            }
        }
        let props = obj.get("properties").and_then(Value::as_object);
        for (k, val) in map {
            match props.and_then(|p| p.get(k)) {
                Some(ps) => check(root, ps, val, &format!("{path}.{k}"))?,
                None if obj.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return Err(format!("{path}: unexpected property {k}"));
                }
                None => {}
            }
        }
    }
    if let (Value::Array(items), Some(is)) = (v, obj.get("items")) {
        for (n, item) in items.iter().enumerate() {
            check(root, is, item, &format!("{path}[{n}]"))?;
        }
    }
    Ok(())
}
