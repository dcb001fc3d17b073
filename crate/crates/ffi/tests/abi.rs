//! Exercises the C ABI from Rust: handle lifecycle, out parameters, status
//! codes, error messages, and the generated header itself.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use tgc_ffi::{
    tgc_cube_example, tgc_cube_free, tgc_cube_get, tgc_cube_is_ternary_group,
    tgc_cube_isomorphism, tgc_cube_new, tgc_cube_order, tgc_cube_parse, tgc_cube_report_json,
    tgc_cube_serialize, tgc_cube_skew_map, tgc_last_error_message, tgc_string_free, tgc_version,
    TgcCube, TgcStatus,
};

fn example(name: &str) -> *mut TgcCube {
    let name = CString::new(name).unwrap();
    let mut cube: *mut TgcCube = ptr::null_mut();
    let status = unsafe { tgc_cube_example(name.as_ptr(), &mut cube) };
    assert_eq!(status, TgcStatus::Ok);
    assert!(!cube.is_null());
    cube
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(tgc_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { tgc_string_free(s) };
    text
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(tgc_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn example_serialize_parse_round_trip() {
    let cube = example("z3");
    assert_eq!(unsafe { tgc_cube_order(cube) }, 3);

    let mut product = usize::MAX;
    assert_eq!(
        unsafe { tgc_cube_get(cube, 0, 1, 1, &mut product) },
        TgcStatus::Ok
    );
    assert_eq!(product, 0, "[0 1 1] = 0 − 1 + 1");

    let mut text_ptr: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { tgc_cube_serialize(cube, &mut text_ptr) },
        TgcStatus::Ok
    );
    let text = take_string(text_ptr);
    assert!(text.starts_with("tgc v1\norder 3\n"), "text: {text}");

    let c_text = CString::new(text).unwrap();
    let mut reparsed: *mut TgcCube = ptr::null_mut();
    assert_eq!(
        unsafe { tgc_cube_parse(c_text.as_ptr(), &mut reparsed) },
        TgcStatus::Ok
    );
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                let (mut a, mut b) = (0usize, 0usize);
                unsafe {
                    assert_eq!(tgc_cube_get(cube, x, y, z, &mut a), TgcStatus::Ok);
                    assert_eq!(tgc_cube_get(reparsed, x, y, z, &mut b), TgcStatus::Ok);
                }
                assert_eq!(a, b);
            }
        }
    }
    unsafe {
        tgc_cube_free(reparsed);
        tgc_cube_free(cube);
    }
}

#[test]
fn statuses_and_error_messages() {
    // Unknown example name.
    let name = CString::new("nope").unwrap();
    let mut cube: *mut TgcCube = ptr::null_mut();
    let status = unsafe { tgc_cube_example(name.as_ptr(), &mut cube) };
    assert_eq!(status, TgcStatus::InvalidInput);
    assert!(last_error().contains("nope"), "message: {}", last_error());
    assert!(cube.is_null(), "out parameter untouched on failure");

    // Parse failure carries the line number.
    let garbage = CString::new("not a cube").unwrap();
    let status = unsafe { tgc_cube_parse(garbage.as_ptr(), &mut cube) };
    assert_eq!(status, TgcStatus::InvalidInput);
    assert!(last_error().contains("line 1"), "message: {}", last_error());

    // Null pointers are reported, not dereferenced.
    let status = unsafe { tgc_cube_parse(ptr::null(), &mut cube) };
    assert_eq!(status, TgcStatus::NullPointer);
    let z3 = example("z3");
    let status = unsafe { tgc_cube_serialize(z3, ptr::null_mut()) };
    assert_eq!(status, TgcStatus::NullPointer);

    // Wrong entry count.
    let entries = [0usize; 7];
    let status = unsafe { tgc_cube_new(2, entries.as_ptr(), entries.len(), &mut cube) };
    assert_eq!(status, TgcStatus::InvalidInput);

    // Out-of-range entry value.
    let entries = [5usize; 8];
    let status = unsafe { tgc_cube_new(2, entries.as_ptr(), entries.len(), &mut cube) };
    assert_eq!(status, TgcStatus::InvalidInput);

    // Out-of-range product lookup.
    let mut product = 0usize;
    let status = unsafe { tgc_cube_get(z3, 0, 0, 3, &mut product) };
    assert_eq!(status, TgcStatus::InvalidInput);
    unsafe { tgc_cube_free(z3) };
}

#[test]
fn group_flags_and_skew_map() {
    let z4 = example("z4p1");
    let mut flag = false;
    assert_eq!(
        unsafe { tgc_cube_is_ternary_group(z4, &mut flag) },
        TgcStatus::Ok
    );
    assert!(flag);
    let mut skew = [usize::MAX; 4];
    assert_eq!(
        unsafe { tgc_cube_skew_map(z4, skew.as_mut_ptr(), skew.len()) },
        TgcStatus::Ok
    );
    assert_eq!(skew, [3, 2, 1, 0]);
    // A buffer of the wrong length is rejected before any write.
    assert_eq!(
        unsafe { tgc_cube_skew_map(z4, skew.as_mut_ptr(), 3) },
        TgcStatus::InvalidInput
    );
    unsafe { tgc_cube_free(z4) };

    // The constant cube is closed but not a group: the flag query succeeds
    // with `false`, while the skew query fails as a property.
    let entries = [0usize; 8];
    let mut cube: *mut TgcCube = ptr::null_mut();
    assert_eq!(
        unsafe { tgc_cube_new(2, entries.as_ptr(), entries.len(), &mut cube) },
        TgcStatus::Ok
    );
    assert_eq!(
        unsafe { tgc_cube_is_ternary_group(cube, &mut flag) },
        TgcStatus::Ok
    );
    assert!(!flag);
    let mut skew = [usize::MAX; 2];
    assert_eq!(
        unsafe { tgc_cube_skew_map(cube, skew.as_mut_ptr(), skew.len()) },
        TgcStatus::PropertyFalse
    );
    unsafe { tgc_cube_free(cube) };
}

#[test]
fn isomorphism_search_across_the_boundary() {
    let z3 = example("z3");
    let s3odd = example("s3odd");
    let z4 = example("z4p1");

    let mut map = [usize::MAX; 3];
    assert_eq!(
        unsafe { tgc_cube_isomorphism(z3, s3odd, map.as_mut_ptr(), map.len()) },
        TgcStatus::Ok
    );
    let mut sorted = map;
    sorted.sort_unstable();
    assert_eq!(sorted, [0, 1, 2], "the witness is a permutation");

    assert_eq!(
        unsafe { tgc_cube_isomorphism(z3, z4, map.as_mut_ptr(), map.len()) },
        TgcStatus::PropertyFalse
    );

    unsafe {
        tgc_cube_free(z3);
        tgc_cube_free(s3odd);
        tgc_cube_free(z4);
    }
}

#[test]
fn report_json_is_complete() {
    let quat = example("quat");
    let mut body: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { tgc_cube_report_json(quat, false, &mut body) },
        TgcStatus::Ok
    );
    let report: serde_json::Value = serde_json::from_str(&take_string(body)).unwrap();
    assert_eq!(report["order"], serde_json::json!(8));
    assert_eq!(report["is_ternary_group"], serde_json::json!(true));
    // Order 8 exceeds the default mediality bound; forcing fills it in.
    assert_eq!(report["medial"], serde_json::Value::Null);
    assert_eq!(
        unsafe { tgc_cube_report_json(quat, true, &mut body) },
        TgcStatus::Ok
    );
    let report: serde_json::Value = serde_json::from_str(&take_string(body)).unwrap();
    assert_eq!(report["medial"], serde_json::json!(false));
    unsafe { tgc_cube_free(quat) };
}

#[test]
fn c_client_compiles_links_and_runs() {
    // The staticlib is emitted next to the deps directory this test runs in.
    let exe = std::env::current_exe().unwrap();
    let debug_dir = exe.parent().unwrap().parent().unwrap();
    let staticlib = debug_dir.join("libtgc_ffi.a");
    let include_dir = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    if !staticlib.exists() {
        return; // artifact layout differs; the header syntax test still runs
    }

    let dir = tempfile::tempdir().unwrap();
    let source = dir.path().join("client.c");
    std::fs::write(
        &source,
        r#"
#include "tgc.h"
#include <stdio.h>
#include <string.h>

int main(void) {
    TgcCube *cube = NULL;
    if (tgc_cube_example("z4p1", &cube) != TGC_STATUS_OK) return 1;
    if (tgc_cube_order(cube) != 4) return 2;
    size_t skew[4];
    if (tgc_cube_skew_map(cube, skew, 4) != TGC_STATUS_OK) return 3;
    if (skew[0] != 3 || skew[1] != 2 || skew[2] != 1 || skew[3] != 0) return 4;
    char *text = NULL;
    if (tgc_cube_serialize(cube, &text) != TGC_STATUS_OK) return 5;
    if (strncmp(text, "tgc v1", 6) != 0) return 6;
    tgc_string_free(text);
    TgcCube *none = NULL;
    if (tgc_cube_example("nope", &none) != TGC_STATUS_INVALID_INPUT) return 7;
    if (strlen(tgc_last_error_message()) == 0) return 8;
    tgc_cube_free(cube);
    printf("ok\n");
    return 0;
}
"#,
    )
    .unwrap();

    let program = dir.path().join("client");
    let compile = std::process::Command::new("clang")
        .arg(&source)
        .args(["-I", include_dir, "-o"])
        .arg(&program)
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .output();
    let compile = match compile {
        Ok(out) => out,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return,
        Err(e) => panic!("clang: {e}"),
    };
    assert!(
        compile.status.success(),
        "compile: {}",
        String::from_utf8_lossy(&compile.stderr)
    );
    let run = std::process::Command::new(&program).output().unwrap();
    assert_eq!(run.status.code(), Some(0), "client exit");
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}

#[test]
fn generated_header_compiles_as_c_and_cpp() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/tgc.h");
    for (compiler, lang) in [("clang", "c"), ("clang++", "c++")] {
        let out = std::process::Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang, header])
            .output();
        match out {
            Ok(out) => assert!(
                out.status.success(),
                "{compiler}: {}",
                String::from_utf8_lossy(&out.stderr)
            ),
            // The toolchain is optional in minimal environments.
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => panic!("{compiler}: {e}"),
        }
    }
}
