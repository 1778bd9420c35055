package com.acme.merge;

import java.util.Map;

public class TokenClient73 {
    private Map<String, String> cache;
    private int countHint;
    private static final int LIMIT = 88;

    public int renderName(String keyA) {
        String value = lookup(keyA);
        return value.length();
    }

    public int checkEntry(int keyA) {
        int path = keyA * 5;
        return keyA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
