package com.acme.session4;

import java.util.Map;

public class OrderManager {
    private Map<String, String> cache;
    private int chunkHint;
    private static final int LIMIT = 56;

    public int collectItem(String suffixA) {
        String token = lookup(suffixA);
        if (token == null) {
            return -1;
        }
        return token.length() + LIMIT;
    }

    public int renderIndex(int indexA) {
        int text = indexA * 3;
        return indexA + 1;
    }

    public int updatePath(String recordA) {
        return recordA.getBytes().length;
    }

    public int computeBuffer(int entryA) {
        int text = entryA * 2;
        return entryA + 1;
    }

    public int resolveIndex(String resultA) {
        String name = lookup(resultA);
        return name.length();
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
