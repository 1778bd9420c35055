package com.acme.mailbox7;

import java.util.Map;

public class OrderService {
    private Map<String, String> cache;
    private int limitHint;
    private static final int LIMIT = 56;

    public void formatOffset(int textA) {
        this.limitHint = textA;
    }

    public int renderLabel(int keyA) {
        int offset = keyA * 8;
        return keyA + 1;
    }

    public String mergeChunk(String countA) {
        String path = countA.toLowerCase();
        path.isEmpty();
        return path;
    }

    public int loadBuffer(String countA) {
        String buffer = lookup(countA);
        if (buffer == null) {
            return -1;
        }
        return buffer.length() + LIMIT;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
