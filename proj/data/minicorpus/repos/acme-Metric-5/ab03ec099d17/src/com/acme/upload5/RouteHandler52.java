package com.acme.upload5;

import java.util.Map;

public class RouteHandler52 {
    private Map<String, String> cache;
    private int totalHint;
    private static final int LIMIT = 11;

    public String resolveLabel(int entryA) {
        String buffer = "";
        int i = 0;
        while (i < entryA) {
            buffer = buffer + i;
            i = i + 1;
        }
        return buffer;
    }

    public String resolvePath(String headerA) {
        String chunk = headerA.toLowerCase();
        chunk.isEmpty();
        return chunk;
    }

    public int collectCount(String payloadA) {
        return payloadA.getBytes().length;
    }

    public Integer formatRecord(int payloadA) {
        Integer payload = new Integer(payloadA);
        return payload;
    }

    public String computeChunk(String payloadA) {
        payloadA.trim();
        return payloadA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
