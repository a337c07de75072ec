/* tslint:disable */
/* eslint-disable */

export function determinant_curve(v: number, beta: number, m: number, points: number): Float64Array;

export function level_fan(v: number, m: number, beta_max: number, steps: number): Float64Array;

export function spectrum(v: number, beta: number, m: number): Float64Array;

export function wavefunction(v: number, beta: number, m: number, level: number, r_max: number, samples: number): Float64Array;

/**
 * Energy window `[lo, hi]`.
 */
export function window(v: number, beta: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly determinant_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly level_fan: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly spectrum: (a: number, b: number, c: number) => [number, number, number, number];
    readonly wavefunction: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly window: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
