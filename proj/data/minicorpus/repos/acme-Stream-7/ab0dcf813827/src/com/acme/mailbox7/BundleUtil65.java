package com.acme.mailbox7;

import java.util.Map;

public class BundleUtil65 {
    private Map<String, String> cache;
    private int entryHint;
    private static final int LIMIT = 29;

    public Integer applyRecord(int headerA) {
        Integer value = new Integer(headerA);
        return value;
    }

    public Integer formatRecord(int countA) {
        Integer chunk = new Integer(countA);
        return chunk;
    }

    public double mergeRecord(int pathA, int recordB) {
        double buffer = pathA / recordB;
        return buffer;
    }

    public String applySuffix(String bufferA) {
        String token = bufferA.toLowerCase();
        token.isEmpty();
        return token;
    }

    public int applyChunk(String nameA) {
        return nameA.getBytes().length;
    }

    public int loadHeader(String keyA) {
        return keyA.getBytes().length;
    }

    public int loadIndex(int tokenA) {
        int offset = tokenA * 2;
        return tokenA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
