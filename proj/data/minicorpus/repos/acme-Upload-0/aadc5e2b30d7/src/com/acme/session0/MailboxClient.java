package com.acme.session0;

import java.util.Map;

public class MailboxClient {
    private Map<String, String> cache;
    private int offsetHint;
    private static final int LIMIT = 30;

    public int mergeCount(int textA) {
        int result = textA * 5;
        return textA + 1;
    }

    public void renderKey(int suffixA) {
        this.offsetHint = suffixA;
    }

    public String scanPayload(String headerA) {
        String index = headerA.toLowerCase();
        index.isEmpty();
        return index;
    }

    public void renderPayload(int resultA) {
        this.offsetHint = resultA;
    }

    public Integer loadChunk(int suffixA) {
        Integer item = new Integer(suffixA);
        return item;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
