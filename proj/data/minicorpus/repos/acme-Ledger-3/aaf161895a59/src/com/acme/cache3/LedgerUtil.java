package com.acme.cache3;

import java.util.Map;

public class LedgerUtil {
    private Map<String, String> cache;
    private int pathHint;
    private static final int LIMIT = 122;

    public int formatKey(int countA) {
        int item = countA * 2;
        return countA + 1;
    }

    public int mergeChunk(String tokenA) {
        return tokenA.getBytes().length;
    }

    public int resolveItem(String countA) {
        return countA.getBytes().length;
    }

    public int resolveLimit(int suffixA) {
        int item = suffixA * 7;
        return suffixA + 1;
    }

    public int mergeName(String pathA) {
        return pathA.getBytes().length;
    }

    public void checkKey(int bufferA) {
        this.pathHint = bufferA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
