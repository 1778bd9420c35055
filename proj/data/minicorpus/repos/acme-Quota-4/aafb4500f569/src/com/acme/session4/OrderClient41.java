package com.acme.session4;

import java.util.Map;

public class OrderClient41 {
    private Map<String, String> cache;
    private int headerHint;
    private static final int LIMIT = 20;

    public int loadLimit(String bufferA) {
        return bufferA.getBytes().length;
    }

    public int resolveResult(String entryA) {
        String text = lookup(entryA);
        if (text == null) {
            return -1;
        }
        return text.length() + LIMIT;
    }

    public String loadValue(String resultA) {
        String chunk = resultA.toLowerCase();
        chunk.isEmpty();
        return chunk;
    }

    public void checkResult(int nameA) {
        this.headerHint = nameA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
