import assert from 'node:assert/strict';
import test from 'node:test';

import { ApiClient, ApiError } from '../src/api.js';

interface Recorded {
    url: string;
    method: string | undefined;
    body: unknown;
}

function fakeFetch(status: number, payload: unknown, calls: Recorded[]) {
    return async (input: string, init?: RequestInit): Promise<Response> => {
        calls.push({
            url: input,
            method: init?.method,
            body: init?.body ? JSON.parse(init.body as string) : undefined,
        });
        return new Response(JSON.stringify(payload), {
            status,
            headers: { 'content-type': 'application/json' },
        });
    };
}

test('each client method issues exactly one matching request', async () => {
    const calls: Recorded[] = [];
    const client = new ApiClient('http://svc', fakeFetch(200, { trees: [] }, calls));

    await client.listTrees();
    await client.createSession('census-mini', ['literature']);
    await client.answer('s1', 2);
    await client.back('s1');
    await client.recordFinding('s1', 'a note');
    await client.getSession('s1');

    assert.deepEqual(
        calls.map((call) => [call.method, call.url]),
        [
            ['GET', 'http://svc/trees'],
            ['POST', 'http://svc/sessions'],
            ['POST', 'http://svc/sessions/s1/answer'],
            ['POST', 'http://svc/sessions/s1/back'],
            ['POST', 'http://svc/sessions/s1/findings'],
            ['GET', 'http://svc/sessions/s1'],
        ],
    );
    assert.deepEqual(calls[1].body, { tree_id: 'census-mini', filter: ['literature'] });
    assert.deepEqual(calls[2].body, { branch_index: 2 });
    assert.deepEqual(calls[4].body, { note: 'a note' });
});

test('filter is omitted when every provenance is allowed', async () => {
    const calls: Recorded[] = [];
    const client = new ApiClient('', fakeFetch(200, {}, calls));
    await client.createSession('census-mini');
    assert.deepEqual(calls[0].body, { tree_id: 'census-mini' });
});

test('server error detail surfaces verbatim as ApiError', async () => {
    const calls: Recorded[] = [];
    const client = new ApiClient(
        '',
        fakeFetch(409, { detail: 'session s1: already at the root' }, calls),
    );
    await assert.rejects(
        () => client.back('s1'),
        (error: unknown) => {
            assert.ok(error instanceof ApiError);
            assert.equal(error.status, 409);
            assert.equal(error.detail, 'session s1: already at the root');
            return true;
        },
    );
});

test('export returns the exact response text alongside the parsed document', async () => {
    const doc = { name: 'walkthrough-x', source_set: 'T', subject_paper: 'census-mini', items: [] };
    const raw = JSON.stringify(doc);
    const client = new ApiClient('', async () => new Response(raw, { status: 200 }));
    const result = await client.exportDataset('x');
    assert.equal(result.raw, raw);
    assert.deepEqual(result.document, doc);
});
